#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glr {

enum class ErrorCode {
    InvalidSpec,
    SizeCapExceeded,
    TableNotARing,
    NotAnIdeal,
    IdealCountCapExceeded,
    SemiringIdealCountCapExceeded,
    GLAxiomsFailed,
    GLRCheckFailed,
    CertificationFailed,
    PreconditionFailed,
    ParseError,
    InvalidArgument,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    Error(ErrorCode code, std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

    ErrorCode code() const { return code_; }

    /// Byte offset into the input for ParseError; npos otherwise.
    std::size_t offset() const { return offset_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    ErrorCode code_;
    std::size_t offset_ = npos;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::TableNotARing: return "TableNotARing";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::IdealCountCapExceeded: return "IdealCountCapExceeded";
    case ErrorCode::SemiringIdealCountCapExceeded: return "SemiringIdealCountCapExceeded";
    case ErrorCode::GLAxiomsFailed: return "GLAxiomsFailed";
    case ErrorCode::GLRCheckFailed: return "GLRCheckFailed";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace glr
