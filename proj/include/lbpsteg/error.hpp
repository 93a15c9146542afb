#pragma once

#include <stdexcept>
#include <string>

namespace lbpsteg {

// Base of every error raised by the library. The CLI maps each subclass to
// its own exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed PGM magic or header.
class FormatError : public Error {
 public:
  using Error::Error;
};

// PGM maxval other than 255.
class UnsupportedDepthError : public Error {
 public:
  using Error::Error;
};

// Pixel data ended before width*height bytes.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class OutOfBoundsError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Payload does not fit in the cover at the requested bits-per-pixel.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class CoverTooSmallError : public Error {
 public:
  using Error::Error;
};

// Stream header is inconsistent with the stego image (bad dims, wrong mu).
class CorruptStreamError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// An internal precondition was violated; indicates a bug in the caller.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lbpsteg
