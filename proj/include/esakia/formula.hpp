#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace esakia {

// Intuitionistic propositional formula. ~a is stored as a -> 0.
class Formula {
 public:
  enum class Kind { var, bottom, top, conj, disj, implies };

  static Formula var(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula neg(Formula a);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Formula& left() const { return *left_; }
  const Formula& right() const { return *right_; }
  bool is_negation() const { return kind_ == Kind::implies && right_->kind_ == Kind::bottom; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  Formula(Kind k, std::string name, std::shared_ptr<const Formula> l,
          std::shared_ptr<const Formula> r);
  Kind kind_;
  std::string name_;
  std::shared_ptr<const Formula> left_;
  std::shared_ptr<const Formula> right_;
};

// Grammar: atoms are identifiers, 0 and 1; ~ binds tighter than &, then |,
// then -> (right associative). Throws ParseError.
Formula parse(std::string_view text);
std::string print(const Formula& f);

std::size_t implication_rank(const Formula& f);
std::size_t formula_size(const Formula& f);
std::set<std::string> variables(const Formula& f);

}  // namespace esakia
