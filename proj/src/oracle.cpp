#include "pathrw/oracle.hpp"

#include <algorithm>

#include "pathrw/engine.hpp"

namespace pathrw {

namespace {

void push_letter(std::vector<Letter>& w, Letter l) {
  if (!w.empty() && w.back().positive != l.positive && w.back().key == l.key) {
    w.pop_back();
  } else {
    w.push_back(std::move(l));
  }
}

Letter opaque(PathTerm g) {
  std::string key = to_string(g);
  return Letter{std::move(key), std::move(g), true};
}

std::vector<Letter> letters_of(const PathTerm& t, const Context& ctx) {
  switch (t.kind()) {
    case PathKind::Atom:
    case PathKind::Step:
      return {opaque(t)};
    case PathKind::Refl:
      return {};
    case PathKind::Sym: {
      auto inner = letters_of(t.sub(), ctx);
      std::reverse(inner.begin(), inner.end());
      for (auto& l : inner) l.positive = !l.positive;
      return inner;
    }
    case PathKind::Trans: {
      auto out = letters_of(t.left(), ctx);
      for (auto& l : letters_of(t.right(), ctx)) push_letter(out, std::move(l));
      return out;
    }
    case PathKind::Xi:
      return {opaque(PathTerm::xi(t.name(), word_to_term(word(t.sub(), ctx))))};
    case PathKind::Mu:
      return {opaque(PathTerm::mu(t.applied(), word_to_term(word(t.sub(), ctx))))};
    case PathKind::Nu:
      return {opaque(PathTerm::nu(word_to_term(word(t.sub(), ctx)), t.applied()))};
  }
  return {};
}

}  // namespace

std::string ReducedWord::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + letters[i].key + (letters[i].positive ? ",+)" : ",-)");
  }
  return out + "] from " + base.to_string();
}

ReducedWord word(const PathTerm& t, const Context& ctx) {
  return ReducedWord{endpoints(t, ctx).first, letters_of(t, ctx)};
}

bool oracle_equal(const PathTerm& s, const PathTerm& t, const Context& ctx) {
  return s.level() == t.level() && word(s, ctx) == word(t, ctx);
}

PathTerm word_to_term(const ReducedWord& w) {
  if (w.letters.empty()) return PathTerm::refl(w.base);
  auto lift = [](const Letter& l) { return l.positive ? l.generator : PathTerm::sym(l.generator); };
  PathTerm acc = lift(w.letters.back());
  for (std::size_t i = w.letters.size() - 1; i-- > 0;) acc = PathTerm::trans(lift(w.letters[i]), std::move(acc));
  return acc;
}

namespace {

struct Entry {
  PathTerm term;
  std::size_t src;
  std::size_t tgt;
};

class ObjectTable {
 public:
  std::size_t id(const Object& o) {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      if (objects_[i].hash() == o.hash() && objects_[i] == o) return i;
    }
    objects_.push_back(o);
    return objects_.size() - 1;
  }
  std::size_t size() const { return objects_.size(); }

 private:
  std::vector<Object> objects_;
};

}  // namespace

std::vector<PathTerm> enumerate_terms(const Context& ctx, std::size_t max_size, std::size_t level,
                                      const std::vector<PathTerm>& generators) {
  if (max_size == 0 || level == 0) return {};
  ObjectTable table;
  std::vector<std::vector<Entry>> by_size(max_size + 1);

  std::vector<PathTerm> gens;
  std::vector<Object> refl_objects;
  if (level == 1) {
    for (const auto& a : ctx.atoms()) gens.push_back(PathTerm::atom(a.name));
    for (const auto& e : ctx.element_names()) refl_objects.push_back(Object::element(e));
  } else {
    for (const auto& g : generators) {
      if (g.level() != level) continue;
      gens.push_back(g);
      auto [a, b] = endpoints(g, ctx);
      for (auto* o : {&a, &b}) {
        if (std::none_of(refl_objects.begin(), refl_objects.end(), [&](const Object& x) { return x == *o; })) {
          refl_objects.push_back(*o);
        }
      }
    }
  }
  for (const auto& g : gens) {
    auto [a, b] = endpoints(g, ctx);
    by_size[1].push_back({g, table.id(a), table.id(b)});
  }
  for (const auto& o : refl_objects) {
    std::size_t id = table.id(ctx.resolve(o));
    by_size[1].push_back({PathTerm::refl(o), id, id});
  }

  // by_source[n][obj] lists indices into by_size[n].
  std::vector<std::vector<std::vector<std::size_t>>> by_source(max_size + 1);
  auto index = [&](std::size_t n) {
    by_source[n].assign(table.size(), {});
    for (std::size_t i = 0; i < by_size[n].size(); ++i) by_source[n][by_size[n][i].src].push_back(i);
  };
  index(1);

  for (std::size_t n = 2; n <= max_size; ++n) {
    auto& cur = by_size[n];
    for (const auto& e : by_size[n - 1]) cur.push_back({PathTerm::sym(e.term), e.tgt, e.src});
    for (std::size_t ls = 1; ls + 2 <= n; ++ls) {
      std::size_t rs = n - 1 - ls;
      for (const auto& l : by_size[ls]) {
        for (std::size_t j : by_source[rs][l.tgt]) {
          const Entry& r = by_size[rs][j];
          cur.push_back({PathTerm::trans(l.term, r.term), l.src, r.tgt});
        }
      }
    }
    index(n);
  }

  std::vector<PathTerm> out;
  for (auto& bucket : by_size) {
    for (auto& e : bucket) out.push_back(std::move(e.term));
  }
  return out;
}

std::vector<Peak> check_confluence(const RuleSet& rs, const Context& ctx, std::size_t max_size) {
  std::vector<Peak> peaks;
  for (const auto& t : enumerate_terms(ctx, max_size)) {
    auto redexes = match_redexes(rs, t);
    if (redexes.size() < 2) continue;
    std::vector<PathTerm> normals;
    for (const auto& r : redexes) {
      auto [next, step] = contract_once(t, r.rule, r.position, rs, ctx);
      normals.push_back(normalize(next, rs, ctx).first);
    }
    for (std::size_t i = 1; i < redexes.size(); ++i) {
      if (!(normals[i] == normals[0])) peaks.push_back({t, redexes[0], redexes[i], normals[0], normals[i]});
    }
  }
  return peaks;
}

}  // namespace pathrw
