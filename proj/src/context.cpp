#include "pathrw/context.hpp"

#include "pathrw/engine.hpp"
#include "pathrw/error.hpp"

namespace pathrw {

bool Context::has_name(const std::string& name) const {
  return has_type(name) || has_element(name) || has_atom(name);
}

void Context::add_type(const std::string& name) {
  if (has_name(name)) throw PathError(ErrorKind::InvalidContext, "name '" + name + "' is already declared");
  types_.insert(name);
}

void Context::add_element(const std::string& name, const std::string& type) {
  if (has_name(name)) throw PathError(ErrorKind::InvalidContext, "name '" + name + "' is already declared");
  if (!type.empty() && !has_type(type)) {
    throw PathError(ErrorKind::InvalidContext, "unknown type '" + type + "'");
  }
  elements_.emplace(name, type);
  element_order_.push_back(name);
}

void Context::add_lambda(const std::string& name, const LambdaTerm& value, const std::string& type) {
  LambdaTerm resolved = resolve(value);
  add_element(name, type);
  lambdas_.emplace(name, std::move(resolved));
}

void Context::add_atom(const AtomDecl& atom) {
  if (has_name(atom.name)) {
    throw PathError(ErrorKind::InvalidContext, "name '" + atom.name + "' is already declared");
  }
  for (const auto* end : {&atom.source, &atom.target}) {
    if (!has_element(*end)) throw PathError(ErrorKind::InvalidContext, "unknown element '" + *end + "'");
  }
  const std::string& st = element_type(atom.source);
  const std::string& tt = element_type(atom.target);
  if (st != tt || st != atom.type) {
    throw PathError(ErrorKind::InvalidContext, "atom '" + atom.name + "' relates '" + atom.source + " : " +
                                                   st + "' and '" + atom.target + " : " + tt + "'");
  }
  validate_axiom_atom(atom, *this);
  atom_index_.emplace(atom.name, atoms_.size());
  atoms_.push_back(atom);
}

const std::string& Context::element_type(const std::string& name) const {
  auto it = elements_.find(name);
  if (it == elements_.end()) throw PathError(ErrorKind::InvalidContext, "unknown element '" + name + "'");
  return it->second;
}

const AtomDecl& Context::atom(const std::string& name) const {
  auto it = atom_index_.find(name);
  if (it == atom_index_.end()) throw PathError(ErrorKind::UnknownAtom, "no atom named '" + name + "'");
  return atoms_[it->second];
}

LambdaTerm Context::element_value(const std::string& name) const {
  auto it = lambdas_.find(name);
  return it == lambdas_.end() ? LambdaTerm::var(name) : it->second;
}

LambdaTerm Context::resolve(const LambdaTerm& m) const {
  if (lambdas_.empty()) return m;
  LambdaTerm out = m;
  for (const auto& v : free_vars(m)) {
    auto it = lambdas_.find(v);
    if (it != lambdas_.end()) out = substitute(out, v, it->second);
  }
  return out;
}

Object Context::resolve(const Object& o) const {
  return o.is_element() ? Object(resolve(o.element())) : o;
}

namespace {

Endpoints endpoints_at(const PathTerm& t, const Context& ctx, Position& pos) {
  switch (t.kind()) {
    case PathKind::Atom: {
      if (!ctx.has_atom(t.name())) {
        throw PathError(ErrorKind::UnknownAtom, "no atom named '" + t.name() + "'", pos);
      }
      const AtomDecl& a = ctx.atom(t.name());
      return {Object(ctx.element_value(a.source)), Object(ctx.element_value(a.target))};
    }
    case PathKind::Refl: {
      Object o = ctx.resolve(t.object());
      return {o, o};
    }
    case PathKind::Sym: {
      pos.push_back(0);
      auto [s, e] = endpoints_at(t.sub(), ctx, pos);
      pos.pop_back();
      return {e, s};
    }
    case PathKind::Trans: {
      pos.push_back(0);
      auto l = endpoints_at(t.left(), ctx, pos);
      pos.back() = 1;
      auto r = endpoints_at(t.right(), ctx, pos);
      pos.pop_back();
      if (!(l.second == r.first)) {
        throw PathError(ErrorKind::EndpointMismatch,
                        "cannot chain " + to_string(t.left()) + " ending at " + l.second.to_string() +
                            " with " + to_string(t.right()) + " starting at " + r.first.to_string(),
                        pos);
      }
      return {l.first, r.second};
    }
    case PathKind::Xi: {
      pos.push_back(0);
      auto [s, e] = endpoints_at(t.sub(), ctx, pos);
      pos.pop_back();
      return {Object(LambdaTerm::abs(t.name(), s.element())), Object(LambdaTerm::abs(t.name(), e.element()))};
    }
    case PathKind::Mu: {
      pos.push_back(0);
      auto [s, e] = endpoints_at(t.sub(), ctx, pos);
      pos.pop_back();
      LambdaTerm n = ctx.resolve(t.applied());
      return {Object(LambdaTerm::app(n, s.element())), Object(LambdaTerm::app(n, e.element()))};
    }
    case PathKind::Nu: {
      pos.push_back(0);
      auto [s, e] = endpoints_at(t.sub(), ctx, pos);
      pos.pop_back();
      LambdaTerm n = ctx.resolve(t.applied());
      return {Object(LambdaTerm::app(s.element(), n)), Object(LambdaTerm::app(e.element(), n))};
    }
    case PathKind::Step:
      return {Object(t.step().before), Object(t.step().after)};
  }
  throw std::logic_error("unreachable");
}

std::optional<Endpoints> validate_at(const PathTerm& t, const Context& ctx, Position& pos,
                                     std::vector<Violation>& out) {
  if (t.kind() == PathKind::Step) {
    const RewriteStep& s = t.step();
    std::vector<Violation> inner;
    Position sub;
    bool ok = validate_at(s.before, ctx, sub, inner).has_value();
    ok = validate_at(s.after, ctx, sub, inner).has_value() && ok;
    if (!ok || !replay_step(s, RuleSet::groupoid_complete(), ctx)) {
      out.push_back({ViolationKind::InvalidStep, pos, "step atom " + to_string(t) + " is not a legal contraction"});
      return std::nullopt;
    }
    return Endpoints{Object(s.before), Object(s.after)};
  }
  if (t.kind() == PathKind::Refl && !t.object().is_element()) {
    std::vector<Violation> inner;
    Position sub;
    if (!validate_at(t.object().path(), ctx, sub, inner)) {
      out.push_back({ViolationKind::InvalidStep, pos, "reflexivity on an ill-formed path " + to_string(t.object().path())});
      return std::nullopt;
    }
    return Endpoints{t.object(), t.object()};
  }
  if (t.kind() == PathKind::Atom || t.kind() == PathKind::Refl) {
    try {
      return endpoints_at(t, ctx, pos);
    } catch (const PathError& e) {
      out.push_back({ViolationKind::UnknownAtom, pos, e.what()});
      return std::nullopt;
    }
  }
  std::vector<std::optional<Endpoints>> kids;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    pos.push_back(i);
    kids.push_back(validate_at(t.child(i), ctx, pos, out));
    pos.pop_back();
  }
  for (const auto& k : kids) {
    if (!k) return std::nullopt;
  }
  switch (t.kind()) {
    case PathKind::Sym:
      return Endpoints{kids[0]->second, kids[0]->first};
    case PathKind::Trans:
      if (!(kids[0]->second == kids[1]->first)) {
        out.push_back({ViolationKind::EndpointMismatch, pos,
                       "left ends at " + kids[0]->second.to_string() + " but right starts at " +
                           kids[1]->first.to_string()});
        return std::nullopt;
      }
      return Endpoints{kids[0]->first, kids[1]->second};
    default:
      // Xi/Mu/Nu have no chaining condition of their own.
      return endpoints_at(t, ctx, pos);
  }
}

}  // namespace

Endpoints endpoints(const PathTerm& t, const Context& ctx) {
  Position pos;
  return endpoints_at(t, ctx, pos);
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::UnknownAtom: return "UnknownAtom";
    case ViolationKind::EndpointMismatch: return "EndpointMismatch";
    case ViolationKind::InvalidStep: return "InvalidStep";
  }
  return "?";
}

WellFormednessReport validate(const PathTerm& t, const Context& ctx) {
  WellFormednessReport report;
  Position pos;
  report.endpoints = validate_at(t, ctx, pos, report.violations);
  return report;
}

}  // namespace pathrw
