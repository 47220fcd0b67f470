#include "polyfun_internal.hpp"
#include "schurext/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace schurext::poly {

int Atom::degree() const {
  switch (kind) {
    case AtomKind::weyl:
    case AtomKind::schur:
      return lambda.size();
    default:
      return a;
  }
}

std::string Atom::to_string() const {
  switch (kind) {
    case AtomKind::divided:
      return "D(" + std::to_string(a) + ")";
    case AtomKind::exterior:
      return "L(" + std::to_string(a) + ")";
    case AtomKind::symmetric:
      return "S(" + std::to_string(a) + ")";
    case AtomKind::weyl:
      return "W(" + lambda.to_string() + ")";
    case AtomKind::schur:
      return "Schur(" + lambda.to_string() + ")";
  }
  return {};
}

int FunctorExpr::degree() const {
  int d = 0;
  for (auto& a : atoms_) d += a.degree();
  return d;
}

bool FunctorExpr::has_schur() const {
  return std::any_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.kind == AtomKind::schur; });
}

std::string FunctorExpr::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < atoms_.size(); ++i) s += (i ? "*" : "") + atoms_[i].to_string();
  return s;
}

FunctorExpr operator*(const FunctorExpr& a, const FunctorExpr& b) {
  std::vector<Atom> v = a.atoms_;
  v.insert(v.end(), b.atoms_.begin(), b.atoms_.end());
  return FunctorExpr(v);
}

FunctorExpr FunctorExpr::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty functor expression");
  std::vector<Atom> atoms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto open = s.find('(', pos);
    auto close = s.find(')', pos);
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw ParseError("bad functor atom in \"" + s + "\"");
    std::string name = s.substr(pos, open - pos);
    std::string body = s.substr(open + 1, close - open - 1);
    Atom atom;
    if (name == "D" || name == "L" || name == "S") {
      if (body.empty() || body.size() > 4 || !std::all_of(body.begin(), body.end(), ::isdigit))
        throw ParseError("bad degree '" + body + "' in \"" + s + "\"");
      atom.kind = name == "D" ? AtomKind::divided : name == "L" ? AtomKind::exterior : AtomKind::symmetric;
      atom.a = std::stoi(body);
    } else if (name == "W" || name == "Schur") {
      atom.kind = name == "W" ? AtomKind::weyl : AtomKind::schur;
      atom.lambda = Partition::parse(body);
    } else {
      throw ParseError("unknown functor atom '" + name + "' in \"" + s + "\"");
    }
    atoms.push_back(atom);
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != '*') throw ParseError("expected '*' in \"" + s + "\"");
      ++pos;
      if (pos == s.size()) throw ParseError("dangling '*' in \"" + s + "\"");
    }
  }
  return FunctorExpr(atoms);
}

FunctorExpr divided(int a) { return FunctorExpr({Atom{AtomKind::divided, a, {}}}); }
FunctorExpr exterior(int a) { return FunctorExpr({Atom{AtomKind::exterior, a, {}}}); }
FunctorExpr symmetric(int a) { return FunctorExpr({Atom{AtomKind::symmetric, a, {}}}); }
FunctorExpr weyl(const Partition& lambda) { return FunctorExpr({Atom{AtomKind::weyl, 0, lambda}}); }
FunctorExpr schur(const Partition& lambda) { return FunctorExpr({Atom{AtomKind::schur, 0, lambda}}); }

FunctorExpr kuhn_dual(const FunctorExpr& f) {
  std::vector<Atom> v = f.atoms();
  for (auto& a : v) {
    switch (a.kind) {
      case AtomKind::divided:
        a.kind = AtomKind::symmetric;
        break;
      case AtomKind::symmetric:
        a.kind = AtomKind::divided;
        break;
      case AtomKind::weyl:
        a.kind = AtomKind::schur;
        break;
      case AtomKind::schur:
        a.kind = AtomKind::weyl;
        break;
      case AtomKind::exterior:
        break;
    }
  }
  return FunctorExpr(v);
}

Weight TableauMonomial::weight() const {
  Weight w = alpha;
  for (int b : beta) ++w.at(b - 1);
  return w;
}

bool TableauMonomial::is_standard() const {
  if (beta.empty()) return true;
  for (int i = 0; i < n(); ++i)
    if (alpha[i] > 0) return i + 1 < beta[0];
  return false;
}

Tableau TableauMonomial::tableau() const {
  Tableau t(1);
  for (int i = 0; i < n(); ++i) t[0].insert(t[0].end(), alpha[i], i + 1);
  for (int b : beta) t.push_back({b});
  return t;
}

std::string TableauMonomial::to_string() const {
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (!alpha[i]) continue;
    s += "e" + std::to_string(i + 1);
    if (alpha[i] > 1) s += "^(" + std::to_string(alpha[i]) + ")";
  }
  if (s.empty()) s = "1";
  s += "(x)";
  if (beta.empty()) return s + "1";
  for (std::size_t k = 0; k < beta.size(); ++k) s += (k ? "^e" : "e") + std::to_string(beta[k]);
  return s;
}

namespace {
std::atomic<int> g_model{static_cast<int>(WeylModel::automatic)};
}

void set_weyl_model(WeylModel m) {
  if (static_cast<int>(m) == g_model.exchange(static_cast<int>(m))) return;
  clear_caches();
}
WeylModel weyl_model() { return static_cast<WeylModel>(g_model.load()); }

namespace detail {

bool use_hook_model(const Partition& lambda) {
  return lambda.is_hook() && weyl_model() != WeylModel::box;
}

Integer merge_coefficient(const Weight& w, const std::vector<int>& target, int len) {
  std::vector<int> acc(len, 0);
  Integer c = 1;
  for (std::size_t j = 0; j < w.size(); ++j) {
    int k = target[j];
    acc[k] += w[j];
    c *= comb::binomial(acc[k], w[j]);
  }
  return c;
}

std::vector<std::string> atom_labels(const Atom& atom, const Weight& w) {
  switch (atom.kind) {
    case AtomKind::divided:
      return {"d" + comb::weight_to_string(w)};
    case AtomKind::symmetric:
      return {"s" + comb::weight_to_string(w)};
    case AtomKind::exterior:
      if (std::any_of(w.begin(), w.end(), [](int x) { return x > 1; })) return {};
      return {"l" + comb::weight_to_string(w)};
    case AtomKind::weyl: {
      std::vector<std::string> out;
      for (auto& t : weyl_basis(atom.lambda, w)) out.push_back(comb::tableau_to_string(t));
      return out;
    }
    case AtomKind::schur:
      throw DomainError("Schur atoms must be rewritten by kuhn_dual before evaluation");
  }
  return {};
}

IntegerMatrix atom_monotone(const Atom& atom, const Weight& w, const std::vector<int>& target, int len) {
  const Weight w2 = push_weight(w, target, len);
  switch (atom.kind) {
    case AtomKind::divided: {
      IntegerMatrix m(1, 1);
      m.set(0, 0, merge_coefficient(w, target, len));
      return m;
    }
    case AtomKind::symmetric:
      return IntegerMatrix::identity(1);
    case AtomKind::exterior: {
      std::size_t r1 = atom_labels(atom, w).size(), r2 = atom_labels(atom, w2).size();
      IntegerMatrix m(r2, r1);
      if (r1 && r2) m.set(0, 0, 1);
      return m;
    }
    case AtomKind::weyl:
      if (use_hook_model(atom.lambda))
        return hook_monotone(atom.lambda[0], atom.lambda.length() - 1, w, target, len);
      return box_monotone(atom.lambda, w, target, len);
    case AtomKind::schur:
      throw DomainError("Schur atoms must be rewritten by kuhn_dual before evaluation");
  }
  return {};
}

}  // namespace detail

Weight push_weight(const Weight& w, const std::vector<int>& target, int len) {
  if (target.size() != w.size()) throw ShapeMismatch("position map length does not match weight");
  Weight out(len, 0);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (target[j] < 0 || target[j] >= len) throw DomainError("position map out of range");
    if (j && target[j] < target[j - 1]) throw DomainError("position map must be weakly increasing");
    out[target[j]] += w[j];
  }
  return out;
}

std::vector<int> specialization_positions(int len, int i) {
  std::vector<int> f(len);
  for (int j = 0; j < len; ++j) f[j] = j < i ? j : j - 1;
  return f;
}

std::vector<int> generization_positions(int len, int i) {
  std::vector<int> f(len);
  for (int j = 0; j < len; ++j) f[j] = j < i ? j : j + 1;
  return f;
}

Weight specialize_weight(const Weight& w, int i) {
  const int n = static_cast<int>(w.size()) - 1;
  if (i < 1 || i > n) throw DomainError("specialization index out of range");
  return push_weight(w, specialization_positions(n + 1, i), n);
}

Weight generize_weight(const Weight& w, int i) {
  const int n = static_cast<int>(w.size());
  if (i < 0 || i > n) throw DomainError("generization index out of range");
  return push_weight(w, generization_positions(n, i), n + 1);
}

namespace {

struct TensorData {
  std::vector<std::vector<Weight>> splittings;
  std::vector<std::vector<std::size_t>> factor_ranks;
  std::vector<std::size_t> offsets;
  std::map<std::vector<Weight>, std::size_t> index;
  std::vector<std::string> labels;
  std::size_t rank = 0;
};

using SpaceKey = std::pair<std::string, Weight>;
using MapKey = std::tuple<std::string, Weight, std::vector<int>, int>;

std::shared_mutex g_mutex;
std::map<SpaceKey, std::shared_ptr<const TensorData>> g_spaces;
std::map<MapKey, std::shared_ptr<const IntegerMatrix>> g_maps;

// Nonnegative vectors v <= bound with |v| = d, lexicographically decreasing.
void bounded_compositions(const Weight& bound, int d, std::vector<Weight>& out) {
  Weight cur(bound.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == bound.size()) {
      if (!left) out.push_back(cur);
      return;
    }
    int rest = 0;
    for (std::size_t j = k + 1; j < bound.size(); ++j) rest += bound[j];
    for (int v = std::min(bound[k], left); v >= 0 && v + rest >= left; --v) {
      cur[k] = v;
      rec(k + 1, left - v);
    }
    cur[k] = 0;
  };
  rec(0, d);
}

std::shared_ptr<const TensorData> tensor_data(const FunctorExpr& f, const Weight& w) {
  SpaceKey key{f.to_string(), w};
  {
    std::shared_lock lock(g_mutex);
    auto it = g_spaces.find(key);
    if (it != g_spaces.end()) return it->second;
  }
  if (f.has_schur()) throw DomainError("Schur atoms must be rewritten by kuhn_dual before evaluation");
  for (int x : w)
    if (x < 0) throw DomainError("weights have nonnegative entries");
  if (comb::weight_size(w) != f.degree())
    throw DomainError("weight " + comb::weight_to_string(w) + " does not have the degree of " + f.to_string());

  auto data = std::make_shared<TensorData>();
  const auto& atoms = f.atoms();
  std::vector<Weight> split(atoms.size());
  std::function<void(std::size_t, const Weight&)> rec = [&](std::size_t j, const Weight& left) {
    if (j == atoms.size()) {
      std::vector<std::vector<std::string>> parts;
      std::vector<std::size_t> ranks;
      for (std::size_t t = 0; t < atoms.size(); ++t) {
        parts.push_back(detail::atom_labels(atoms[t], split[t]));
        ranks.push_back(parts.back().size());
        if (ranks.back() == 0) return;
      }
      data->index[split] = data->splittings.size();
      data->splittings.push_back(split);
      data->factor_ranks.push_back(ranks);
      data->offsets.push_back(data->rank);
      std::vector<std::size_t> idx(atoms.size(), 0);
      while (true) {
        std::string lab;
        for (std::size_t t = 0; t < atoms.size(); ++t) lab += (t ? "*" : "") + parts[t][idx[t]];
        data->labels.push_back(lab);
        ++data->rank;
        std::size_t t = atoms.size();
        while (t > 0 && ++idx[t - 1] == ranks[t - 1]) idx[--t] = 0;
        if (t == 0) break;
      }
      return;
    }
    std::vector<Weight> choices;
    if (j + 1 == atoms.size()) {
      if (comb::weight_size(left) == atoms[j].degree()) choices.push_back(left);
    } else {
      bounded_compositions(left, atoms[j].degree(), choices);
    }
    for (auto& v : choices) {
      split[j] = v;
      Weight rest = left;
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= v[k];
      rec(j + 1, rest);
    }
  };
  rec(0, w);

  std::unique_lock lock(g_mutex);
  return g_spaces.emplace(key, data).first->second;
}

IntegerMatrix kron(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto& [j, x] : a.row(i))
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (auto& [l, y] : b.row(k)) m.set(i * b.rows() + k, j * b.cols() + l, x * y);
  return m;
}

}  // namespace

WeightSpace weight_space(const FunctorExpr& f, const Weight& w, const Ring& ring) {
  auto data = tensor_data(f, w);
  WeightSpace ws;
  ws.functor = f;
  ws.weight = w;
  ws.ring = ring;
  ws.labels = data->labels;
  if (f.atoms().size() == 1 && f.atoms()[0].kind == AtomKind::weyl) {
    const auto& lambda = f.atoms()[0].lambda;
    if (detail::use_hook_model(lambda)) {
      auto ambient = hook_ambient_monomials(lambda[0], lambda.length() - 1, w);
      auto basis = hook_standard_basis(lambda[0], lambda.length() - 1, w);
      ws.ambient_coordinates = IntegerMatrix(ambient.size(), basis.size());
      for (std::size_t i = 0; i < ambient.size(); ++i) {
        std::vector<int> key = ambient[i].alpha;
        key.insert(key.end(), ambient[i].beta.begin(), ambient[i].beta.end());
        ws.ambient_keys.push_back(key);
        auto pos = std::find(basis.begin(), basis.end(), ambient[i]);
        if (pos != basis.end()) ws.ambient_coordinates.set(i, pos - basis.begin(), 1);
      }
    } else {
      detail::box_ambient(lambda, w, ws.ambient_coordinates, ws.ambient_keys);
    }
    ws.ambient_coordinates = ws.ambient_coordinates.reduced(ring);
  }
  return ws;
}

std::size_t weight_space_rank(const FunctorExpr& f, const Weight& w) { return tensor_data(f, w)->rank; }

IntegerMatrix monotone_matrix(const FunctorExpr& f, const Weight& w, const std::vector<int>& target, int len,
                              const Ring& ring) {
  MapKey key{f.to_string(), w, target, len};
  std::shared_ptr<const IntegerMatrix> cached;
  {
    std::shared_lock lock(g_mutex);
    auto it = g_maps.find(key);
    if (it != g_maps.end()) cached = it->second;
  }
  if (!cached) {
    const Weight w2 = push_weight(w, target, len);
    auto src = tensor_data(f, w);
    auto dst = tensor_data(f, w2);
    auto m = std::make_shared<IntegerMatrix>(dst->rank, src->rank);
    for (std::size_t s = 0; s < src->splittings.size(); ++s) {
      std::vector<Weight> image;
      for (auto& part : src->splittings[s]) image.push_back(push_weight(part, target, len));
      auto it = dst->index.find(image);
      if (it == dst->index.end()) continue;
      IntegerMatrix block = IntegerMatrix::identity(1);
      for (std::size_t t = 0; t < f.atoms().size(); ++t)
        block = kron(block, detail::atom_monotone(f.atoms()[t], src->splittings[s][t], target, len));
      m->add_block(dst->offsets[it->second], src->offsets[s], block);
    }
    std::unique_lock lock(g_mutex);
    cached = g_maps.emplace(key, m).first->second;
  }
  return cached->reduced(ring);
}

IntegerMatrix specialization_matrix(const FunctorExpr& f, const Weight& w, int i, const Ring& ring) {
  const int n = static_cast<int>(w.size()) - 1;
  if (i < 1 || i > n) throw DomainError("specialization index out of range");
  return monotone_matrix(f, w, specialization_positions(n + 1, i), n, ring);
}

IntegerMatrix generization_matrix(const FunctorExpr& f, const Weight& w, int i, const Ring& ring) {
  const int n = static_cast<int>(w.size());
  if (i < 0 || i > n) throw DomainError("generization index out of range");
  return monotone_matrix(f, w, generization_positions(n, i), n + 1, ring);
}

void clear_caches() {
  {
    std::unique_lock lock(g_mutex);
    g_spaces.clear();
    g_maps.clear();
  }
  detail::clear_weyl_caches();
  detail::clear_hook_caches();
}

}  // namespace schurext::poly
