#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

struct InvalidSpecError : std::invalid_argument {
    explicit InvalidSpecError(const std::string& what) : std::invalid_argument(what) {}
};

struct SpecMismatchError : std::invalid_argument {
    explicit SpecMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct OrderCapExceededError : std::runtime_error {
    explicit OrderCapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedError : std::invalid_argument {
    explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidIdError : std::invalid_argument {
    explicit InvalidIdError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotACharacterError : std::domain_error {
    explicit NotACharacterError(const std::string& what) : std::domain_error(what) {}
};

struct InvalidIndexError : std::invalid_argument {
    explicit InvalidIndexError(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRangeError : std::out_of_range {
    explicit IndexOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

struct SearchCapExceededError : std::runtime_error {
    explicit SearchCapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct NotABijectionError : std::invalid_argument {
    explicit NotABijectionError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidMError : std::invalid_argument {
    explicit InvalidMError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mckay
