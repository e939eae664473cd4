#pragma once

#include <cstdint>
#include <string>

namespace conformal {

// Interned polynomial indeterminate.  Five names are reserved with a fixed
// global order: "d" (the translation generator), "l", "m", "n" (bracket
// parameters), "a" (the family parameter).  Every other name sorts after
// those five, lexicographically.  The intern table is append-only and
// guarded, so Variable values are cheap to copy and safe to share across
// threads.
class Variable {
public:
  // Interns (or looks up) a variable by name.  Names must be nonempty and
  // consist of [A-Za-z][A-Za-z0-9_]*.
  explicit Variable(const std::string &name);

  const std::string &name() const;

  // Rank in the canonical global order: 0..4 for d,l,m,n,a; 5 for the rest.
  int reserved_rank() const;

  uint32_t id() const { return id_; }

  friend bool operator==(Variable a, Variable b) { return a.id_ == b.id_; }
  friend bool operator!=(Variable a, Variable b) { return a.id_ != b.id_; }

  // Canonical global order (see class comment).
  friend bool operator<(Variable a, Variable b);

private:
  uint32_t id_;
};

namespace vars {
// The five reserved indeterminates.
Variable d();       // translation generator
Variable lambda();  // first bracket parameter, prints as "l"
Variable mu();      // second bracket parameter, prints as "m"
Variable nu();      // third bracket parameter, prints as "n"
Variable alpha();   // family parameter, prints as "a"
}  // namespace vars

}  // namespace conformal
