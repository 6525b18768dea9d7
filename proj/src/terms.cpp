#include "pathrw/terms.hpp"

#include <optional>

namespace pathrw {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string position_to_string(const Position& pos) {
  std::string out = "[";
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(pos[i]);
  }
  return out + "]";
}

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::NotAnAxiomInstance: return "NotAnAxiomInstance";
    case ErrorKind::NoRedex: return "NoRedex";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::UnknownRule: return "UnknownRule";
    case ErrorKind::InvalidContext: return "InvalidContext";
  }
  return "Error";
}

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::Atom: return "atom";
    case PathKind::Refl: return "rho";
    case PathKind::Sym: return "sigma";
    case PathKind::Trans: return "tau";
    case PathKind::Xi: return "xi";
    case PathKind::Mu: return "mu";
    case PathKind::Nu: return "nu";
    case PathKind::Step: return "step";
  }
  return "?";
}

std::string_view to_string(Direction d) {
  return d == Direction::Forward ? "forward" : "reverse";
}

struct PathTerm::Node {
  PathKind kind;
  std::size_t level = 1;
  std::size_t size = 1;
  std::size_t hash = 0;
  std::string name;
  std::optional<Object> object;
  std::optional<LambdaTerm> applied;
  std::shared_ptr<const RewriteStep> step;
  std::vector<PathTerm> children;
};

namespace {

void require_level(std::size_t got, std::size_t want, std::string_view what) {
  if (got != want) {
    throw PathError(ErrorKind::LevelMismatch, std::string(what) + " expects a level " +
                                                  std::to_string(want) + " term, got level " +
                                                  std::to_string(got));
  }
}

}  // namespace

PathTerm PathTerm::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = PathKind::Atom;
  n->hash = mix(101, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return PathTerm(std::move(n));
}

PathTerm PathTerm::refl(Object object) {
  auto n = std::make_shared<Node>();
  n->kind = PathKind::Refl;
  n->level = object.level() + 1;
  n->hash = mix(mix(103, n->level), object.hash());
  n->object = std::move(object);
  return PathTerm(std::move(n));
}

PathTerm PathTerm::sym(PathTerm sub) {
  auto n = std::make_shared<Node>();
  n->kind = PathKind::Sym;
  n->level = sub.level();
  n->size = sub.size() + 1;
  n->hash = mix(107, sub.hash());
  n->children.push_back(std::move(sub));
  return PathTerm(std::move(n));
}

PathTerm PathTerm::trans(PathTerm left, PathTerm right) {
  require_level(right.level(), left.level(), "tau");
  auto n = std::make_shared<Node>();
  n->kind = PathKind::Trans;
  n->level = left.level();
  n->size = left.size() + right.size() + 1;
  n->hash = mix(mix(109, left.hash()), right.hash());
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  return PathTerm(std::move(n));
}

PathTerm PathTerm::xi(std::string bound, PathTerm sub) {
  require_level(sub.level(), 1, "xi");
  auto n = std::make_shared<Node>();
  n->kind = PathKind::Xi;
  n->size = sub.size() + 1;
  n->hash = mix(mix(113, std::hash<std::string>{}(bound)), sub.hash());
  n->name = std::move(bound);
  n->children.push_back(std::move(sub));
  return PathTerm(std::move(n));
}

PathTerm PathTerm::mu(LambdaTerm applied, PathTerm sub) {
  require_level(sub.level(), 1, "mu");
  auto n = std::make_shared<Node>();
  n->kind = PathKind::Mu;
  n->size = sub.size() + 1;
  n->hash = mix(mix(127, applied.hash()), sub.hash());
  n->applied = std::move(applied);
  n->children.push_back(std::move(sub));
  return PathTerm(std::move(n));
}

PathTerm PathTerm::nu(PathTerm sub, LambdaTerm applied) {
  require_level(sub.level(), 1, "nu");
  auto n = std::make_shared<Node>();
  n->kind = PathKind::Nu;
  n->size = sub.size() + 1;
  n->hash = mix(mix(131, sub.hash()), applied.hash());
  n->applied = std::move(applied);
  n->children.push_back(std::move(sub));
  return PathTerm(std::move(n));
}

PathTerm PathTerm::step(RewriteStep step) {
  if (step.direction != Direction::Forward) {
    throw std::invalid_argument("step atoms hold forward steps; flip reverse steps first");
  }
  require_level(step.before.level(), step.level, "step");
  require_level(step.after.level(), step.level, "step");
  auto n = std::make_shared<Node>();
  n->kind = PathKind::Step;
  n->level = step.level + 1;
  std::size_t h = mix(137, std::hash<std::string>{}(step.rule));
  for (std::size_t i : step.position) h = mix(h, i);
  h = mix(mix(h, step.before.hash()), step.after.hash());
  n->hash = h;
  n->step = std::make_shared<const RewriteStep>(std::move(step));
  return PathTerm(std::move(n));
}

PathKind PathTerm::kind() const { return node_->kind; }
std::size_t PathTerm::level() const { return node_->level; }
const std::string& PathTerm::name() const { return node_->name; }
const Object& PathTerm::object() const { return *node_->object; }
const LambdaTerm& PathTerm::applied() const { return *node_->applied; }
const RewriteStep& PathTerm::step() const { return *node_->step; }
std::size_t PathTerm::arity() const { return node_->children.size(); }
const PathTerm& PathTerm::child(std::size_t i) const { return node_->children.at(i); }
std::size_t PathTerm::size() const { return node_->size; }
std::size_t PathTerm::hash() const { return node_->hash; }

bool operator==(const PathTerm& a, const PathTerm& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size || x.level != y.level) return false;
  switch (x.kind) {
    case PathKind::Atom:
      return x.name == y.name;
    case PathKind::Refl:
      return *x.object == *y.object;
    case PathKind::Xi:
      if (x.name != y.name) return false;
      break;
    case PathKind::Mu:
    case PathKind::Nu:
      if (!(*x.applied == *y.applied)) return false;
      break;
    case PathKind::Step:
      return *x.step == *y.step;
    default:
      break;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

std::size_t Object::level() const {
  return is_element() ? 0 : path().level();
}

std::size_t Object::hash() const {
  return is_element() ? element().alpha_hash() : path().hash();
}

std::string Object::to_string() const {
  return is_element() ? element().to_string() : pathrw::to_string(path());
}

bool operator==(const Object& a, const Object& b) {
  if (a.is_element() != b.is_element()) return false;
  if (a.is_element()) return alpha_eq(a.element(), b.element());
  return a.path() == b.path();
}

RewriteStep RewriteStep::flipped() const {
  return RewriteStep{rule, position,
                     direction == Direction::Forward ? Direction::Reverse : Direction::Forward,
                     after, before, level};
}

bool operator==(const RewriteStep& a, const RewriteStep& b) {
  return a.rule == b.rule && a.position == b.position && a.direction == b.direction &&
         a.level == b.level && a.before == b.before && a.after == b.after;
}

std::size_t size(const PathTerm& t) { return t.size(); }

const PathTerm& subterm_at(const PathTerm& t, const Position& pos) {
  const PathTerm* cur = &t;
  for (std::size_t i : pos) {
    if (i >= cur->arity()) {
      throw std::out_of_range("position " + position_to_string(pos) + " is outside the term");
    }
    cur = &cur->child(i);
  }
  return *cur;
}

PathTerm with_children(const PathTerm& t, std::vector<PathTerm> children) {
  switch (t.kind()) {
    case PathKind::Sym: return PathTerm::sym(std::move(children.at(0)));
    case PathKind::Trans: return PathTerm::trans(std::move(children.at(0)), std::move(children.at(1)));
    case PathKind::Xi: return PathTerm::xi(t.name(), std::move(children.at(0)));
    case PathKind::Mu: return PathTerm::mu(t.applied(), std::move(children.at(0)));
    case PathKind::Nu: return PathTerm::nu(std::move(children.at(0)), t.applied());
    default: return t;
  }
}

namespace {

PathTerm replace_from(const PathTerm& t, const Position& pos, std::size_t depth, PathTerm replacement) {
  if (depth == pos.size()) return replacement;
  std::size_t i = pos[depth];
  if (i >= t.arity()) {
    throw std::out_of_range("position " + position_to_string(pos) + " is outside the term");
  }
  std::vector<PathTerm> kids;
  kids.reserve(t.arity());
  for (std::size_t k = 0; k < t.arity(); ++k) {
    kids.push_back(k == i ? replace_from(t.child(k), pos, depth + 1, std::move(replacement)) : t.child(k));
  }
  return with_children(t, std::move(kids));
}

}  // namespace

PathTerm replace_at(const PathTerm& t, const Position& pos, PathTerm replacement) {
  return replace_from(t, pos, 0, std::move(replacement));
}

namespace {

void print(const PathTerm& t, std::string& out);

void print_applied(const LambdaTerm& m, std::string& out) {
  out += m.to_string();
}

void print(const PathTerm& t, std::string& out) {
  switch (t.kind()) {
    case PathKind::Atom:
      out += t.name();
      return;
    case PathKind::Refl:
      out += "rho(" + t.object().to_string() + ")";
      return;
    case PathKind::Sym:
      out += "sigma(";
      print(t.sub(), out);
      out += ")";
      return;
    case PathKind::Trans:
      out += "tau(";
      print(t.left(), out);
      out += ", ";
      print(t.right(), out);
      out += ")";
      return;
    case PathKind::Xi:
      out += "xi(" + t.name() + ", ";
      print(t.sub(), out);
      out += ")";
      return;
    case PathKind::Mu:
      out += "mu(";
      print_applied(t.applied(), out);
      out += ", ";
      print(t.sub(), out);
      out += ")";
      return;
    case PathKind::Nu:
      out += "nu(";
      print(t.sub(), out);
      out += ", ";
      print_applied(t.applied(), out);
      out += ")";
      return;
    case PathKind::Step: {
      const RewriteStep& s = t.step();
      out += "step(" + s.rule + ", " + position_to_string(s.position) + ", ";
      print(s.before, out);
      out += ", ";
      print(s.after, out);
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string to_string(const PathTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const RewriteStep& s) {
  return s.rule + " " + position_to_string(s.position) + " " + std::string(to_string(s.direction)) +
         ": " + to_string(s.before) + " => " + to_string(s.after);
}

}  // namespace pathrw
