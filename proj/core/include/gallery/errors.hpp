#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gallery {

// Error classes map 1:1 onto the CLI's machine-parsable prefixes and exit
// codes. Every throw site picks the class that names the violated contract.
enum class ErrorClass {
  dimension,    // shape mismatch between operands
  validation,   // data violates a documented invariant
  format,       // malformed on-disk bytes (NPY/NPZ/checkpoint/edge list)
  schema,       // well-formed archive missing/duplicating a required key
  config,       // bad configuration value or unknown backend/option
  not_found,    // registry miss (model/dataset name)
  integrity,    // checksum mismatch on fetched or cached data
  contract,     // API precondition violated (empty mask, double backward, ...)
  lifecycle,    // build-before-process, backend switch mid-run
  unsupported,  // dtype or op without an implementation
  divergence,   // non-finite loss during training
  fetch,        // network failure while downloading (retryable)
  io,           // filesystem failure
};

std::string_view to_string(ErrorClass c);

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& message)
      : std::runtime_error(message), class_(cls) {}

  ErrorClass error_class() const noexcept { return class_; }

 private:
  ErrorClass class_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& m) : Error(ErrorClass::dimension, m) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& m) : Error(ErrorClass::validation, m) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& m) : Error(ErrorClass::format, m) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& m) : Error(ErrorClass::schema, m) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& m) : Error(ErrorClass::config, m) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& m) : Error(ErrorClass::not_found, m) {}
};

class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& m) : Error(ErrorClass::integrity, m) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& m) : Error(ErrorClass::contract, m) {}
};

class LifecycleError : public Error {
 public:
  explicit LifecycleError(const std::string& m) : Error(ErrorClass::lifecycle, m) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& m) : Error(ErrorClass::unsupported, m) {}
};

class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& m, int epoch)
      : Error(ErrorClass::divergence, m), epoch_(epoch) {}

  int epoch() const noexcept { return epoch_; }

 private:
  int epoch_;
};

class FetchError : public Error {
 public:
  explicit FetchError(const std::string& m) : Error(ErrorClass::fetch, m) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& m) : Error(ErrorClass::io, m) {}
};

}  // namespace gallery
