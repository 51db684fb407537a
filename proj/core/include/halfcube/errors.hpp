#pragma once

#include <stdexcept>
#include <string>

namespace halfcube {

/// Raised when a request would enumerate more than the configured budget
/// (group elements, cells, or a complex too large to build).
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Character-theory operations that are undefined for their arguments.
class CharacterError : public std::domain_error {
public:
    enum class Kind {
        split_label_unsupported,
        not_in_d,
        split_label_would_arise,
        hypothesis_violated,
        size_mismatch,
    };

    CharacterError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// A matrix sequence handed to the homology engine does not square to zero.
class NotAComplex : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Size limits. Enumeration-only work (cell census) scales further than
/// anything that builds matrices or walks a whole group.
struct Budget {
    int max_enumeration_n = 8;
    int max_homology_n = 6;
    int max_group_n = 6;
};

}  // namespace halfcube
