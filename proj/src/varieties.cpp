#include "gpdual/varieties.hpp"

#include <algorithm>

#include "gpdual/errors.hpp"

namespace gpdual {

namespace {

constexpr int kRetryBudget = 100;

FieldMatrix random_full_rank(const PrimeField& f, Rng& rng, std::size_t rows,
                             std::size_t cols, const char* what) {
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    FieldMatrix m = FieldMatrix::random(f, rows, cols, rng);
    if (m.rank() == std::min(rows, cols)) return m;
  }
  throw BudgetError(std::string("random_full_rank: budget exhausted for ") + what);
}

FieldMatrix rank4_normal_form(const PrimeField& f) {
  FieldMatrix n0(f, kDimV, kDimV);
  n0.set(0, 1, 1); n0.set(1, 0, f.neg(1));
  n0.set(2, 3, 1); n0.set(3, 2, f.neg(1));
  return n0;
}

}  // namespace

Ring bivector_ring(const PrimeField& f) { return Ring::make(f, kDimW2); }
Ring form_ring(const PrimeField& f) { return Ring::make(f, kDimW2); }
Ring section_ring(const PrimeField& f, int nvars) { return Ring::make(f, nvars); }

std::vector<SparsePolynomial> decomposable_quadrics(const Ring& ring) {
  if (ring.nvars != kDimW2)
    throw InvariantError("decomposable_quadrics: ring must have 21 variables");
  const PrimeField& f = ring.field;
  std::vector<SparsePolynomial> out;
  out.reserve(kDimW4);
  for (const auto& q : quad_table()) {
    const int a = q[0], b = q[1], c = q[2], d = q[3];
    auto cross = [&](int i, int j, int k, int l) {
      return SparsePolynomial::variable(ring, pair_index(i, j)) *
             SparsePolynomial::variable(ring, pair_index(k, l));
    };
    SparsePolynomial g = cross(a, b, c, d) - cross(a, c, b, d) + cross(a, d, b, c);
    out.push_back(g.scaled(2));
  }
  return out;
}

std::vector<SparsePolynomial> subpfaffian_cubics(const Ring& ring) {
  if (ring.nvars != kDimW2)
    throw InvariantError("subpfaffian_cubics: ring must have 21 variables");
  const SparsePolynomial zero = SparsePolynomial::zero(ring);
  std::vector<std::vector<SparsePolynomial>> gen(kDimV,
      std::vector<SparsePolynomial>(kDimV, zero));
  for (int i = 0; i < kDimV; ++i)
    for (int j = i + 1; j < kDimV; ++j) {
      gen[i][j] = SparsePolynomial::variable(ring, pair_index(i, j));
      gen[j][i] = -gen[i][j];
    }
  std::vector<SparsePolynomial> out;
  out.reserve(kDimV);
  for (int drop = 0; drop < kDimV; ++drop) {
    std::vector<std::vector<SparsePolynomial>> minor;
    minor.reserve(kDimV - 1);
    for (int i = 0; i < kDimV; ++i) {
      if (i == drop) continue;
      std::vector<SparsePolynomial> row;
      row.reserve(kDimV - 1);
      for (int j = 0; j < kDimV; ++j)
        if (j != drop) row.push_back(gen[i][j]);
      minor.push_back(std::move(row));
    }
    out.push_back(pfaffian_generic(
        minor, zero, SparsePolynomial::constant(ring, 1),
        [](const SparsePolynomial& p) { return p.is_zero(); }));
  }
  return out;
}

std::vector<SparsePolynomial> incidence_linear_forms(const Ring& ring,
                                                     const Subspace& k3) {
  if (ring.nvars != kDimW2)
    throw InvariantError("incidence_linear_forms: ring must have 21 variables");
  if (k3.ambient() != kDimV || k3.dim() != 3)
    throw InvariantError("incidence_linear_forms: expected a 3-space in V");
  Subspace forms = wedge2_subspace(k3.annihilator());
  std::vector<SparsePolynomial> out;
  out.reserve(forms.dim());
  for (std::size_t r = 0; r < forms.dim(); ++r) {
    std::vector<Term> ts;
    for (int k = 0; k < kDimW2; ++k)
      if (std::uint32_t c = forms.basis().at(r, k))
        ts.push_back({Monomial::var(ring.nvars, k), c});
    out.push_back(SparsePolynomial::from_terms(ring, std::move(ts)));
  }
  return out;
}

std::vector<SparsePolynomial> incidence_chart_minors(const Ring& ring8) {
  if (ring8.nvars != 8)
    throw InvariantError("incidence_chart_minors: ring must have 8 variables");
  auto v = [&](int i) { return SparsePolynomial::variable(ring8, i); };
  std::vector<SparsePolynomial> out;
  out.reserve(6);
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k)
      out.push_back(v(j) * v(4 + k) - v(k) * v(4 + j));
  return out;
}

std::vector<SparsePolynomial> restrict_to_subspace(
    const std::vector<SparsePolynomial>& gens, const Subspace& space,
    const Ring& target) {
  if (space.dim() != static_cast<std::size_t>(target.nvars))
    throw InvariantError("restrict_to_subspace: target variable count != dim");
  FieldMatrix map = space.basis().transpose();  // ambient x dim
  std::vector<SparsePolynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.substitute_linear(map, target));
  return out;
}

std::vector<SparsePolynomial> section_x_ideal(const Instance& inst,
                                              const Ring& ring14) {
  return restrict_to_subspace(decomposable_quadrics(bivector_ring(inst.field)),
                              inst.M, ring14);
}

std::vector<SparsePolynomial> section_y_ideal(const Instance& inst,
                                              const Ring& ring7) {
  return restrict_to_subspace(subpfaffian_cubics(form_ring(inst.field)),
                              inst.W, ring7);
}

std::vector<SparsePolynomial> curve_ideal(const Instance& inst,
                                          const TwoForm& y,
                                          const Ring& ring14) {
  auto [rank, ker] = form_rank_kernel(y);
  if (rank != 4)
    throw InvariantError("curve_ideal: the form must have rank 4");
  auto gens = section_x_ideal(inst, ring14);
  auto cuts = restrict_to_subspace(
      incidence_linear_forms(bivector_ring(inst.field), ker), inst.M, ring14);
  for (auto& c : cuts)
    if (!c.is_zero()) gens.push_back(std::move(c));
  return gens;
}

Instance random_instance(std::uint64_t seed, std::uint32_t p) {
  PrimeField f(p);
  Rng rng(derive_seed(seed, "instance"));
  FieldMatrix w = random_full_rank(f, rng, kDimV, kDimW2, "W");
  Subspace W = Subspace::row_space(w);
  return Instance{f, seed, "random", W, W.annihilator(), std::nullopt,
                  std::nullopt};
}

TwoForm transported_rank4_form(const PrimeField& f, Rng& rng,
                               FieldMatrix* basis_out) {
  FieldMatrix b = random_full_rank(f, rng, kDimV, kDimV, "basis change");
  FieldMatrix binv = b.inverse();
  FieldMatrix y = binv.transpose().mul(rank4_normal_form(f)).mul(binv);
  if (basis_out) *basis_out = b;
  return TwoForm::from_matrix(std::move(y));
}

Instance engineered_singular_instance(std::uint64_t seed, std::uint32_t p) {
  PrimeField f(p);
  Rng rng(derive_seed(seed, "engineered"));

  Subspace k3 = Subspace::row_space(random_full_rank(f, rng, 3, kDimV, "K"));

  // A 2-plane T inside K, via a full-rank 2x3 coefficient matrix.
  FieldMatrix coeff = random_full_rank(f, rng, 2, 3, "T in K");
  TwoPlane t = TwoPlane::from_rows(coeff.mul(k3.basis()));

  // Rank-4 form with kernel exactly K: conjugate the normal form by a basis
  // whose last three columns span K.
  TwoForm y = [&] {
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
      FieldMatrix b = FieldMatrix::random(f, kDimV, kDimV, rng);
      for (int c = 0; c < 3; ++c)
        for (int r = 0; r < kDimV; ++r) b.set(r, 4 + c, k3.basis().at(c, r));
      if (b.rank() != kDimV) continue;
      FieldMatrix binv = b.inverse();
      return TwoForm::from_matrix(
          binv.transpose().mul(rank4_normal_form(f)).mul(binv));
    }
    throw BudgetError("engineered instance: no invertible frame around K");
  }();

  PluckerVector x = plucker_embed(t);
  if (pair_eval(y, x))
    throw InvariantError("engineered instance: witness pairing is nonzero");

  // Forms vanishing on x (20-dimensional); W = <y> + 6 more of them.
  FieldMatrix xrow(f, 1, kDimW2);
  for (int k = 0; k < kDimW2; ++k) xrow.set(0, k, x[k]);
  Subspace vanish = Subspace::row_space(xrow).annihilator();

  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    FieldMatrix stack(f, 0, kDimW2);
    stack.append_row(y.coords());
    FieldMatrix mix = FieldMatrix::random(f, 6, vanish.dim(), rng);
    FieldMatrix rest = mix.mul(vanish.basis());
    for (std::size_t r = 0; r < 6; ++r) stack.append_row(rest.row(r));
    if (stack.rank() != kDimV) continue;

    Subspace W = Subspace::row_space(stack);
    Subspace M = W.annihilator();
    if (!M.contains(x.coords()))
      throw InvariantError("engineered instance: witness x escaped M");
    return Instance{f, seed, "engineered", W, M, x, y};
  }
  throw BudgetError("engineered instance: could not complete W to rank 7 (seed " +
                    std::to_string(seed) + ")");
}

nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json j;
  j["p"] = inst.field.modulus();
  j["seed"] = inst.seed;
  j["provenance"] = inst.provenance;
  auto dump_basis = [](const Subspace& s) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < s.ambient(); ++c) row.push_back(s.basis().at(r, c));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["W"] = dump_basis(inst.W);
  j["M"] = dump_basis(inst.M);
  if (inst.witness_x && inst.witness_y) {
    nlohmann::ordered_json wit;
    nlohmann::ordered_json xs = nlohmann::ordered_json::array();
    for (int k = 0; k < kDimW2; ++k) xs.push_back((*inst.witness_x)[k]);
    wit["x"] = std::move(xs);
    nlohmann::ordered_json ym = nlohmann::ordered_json::array();
    for (int r = 0; r < kDimV; ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int c = 0; c < kDimV; ++c) row.push_back(inst.witness_y->matrix().at(r, c));
      ym.push_back(std::move(row));
    }
    wit["y"] = std::move(ym);
    j["witnesses"] = std::move(wit);
  }
  return j;
}

namespace {

[[noreturn]] void bad_field(const std::string& name, const std::string& why) {
  throw InvariantError("instance field '" + name + "': " + why);
}

std::uint32_t read_entry(const nlohmann::ordered_json& v, const PrimeField& f,
                         const std::string& name) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    bad_field(name, "entry is not an integer");
  std::int64_t e = v.get<std::int64_t>();
  if (e < 0 || e >= static_cast<std::int64_t>(f.modulus()))
    bad_field(name, "entry out of range [0, p)");
  return static_cast<std::uint32_t>(e);
}

FieldMatrix read_matrix(const nlohmann::ordered_json& j, const PrimeField& f,
                        std::size_t rows, std::size_t cols,
                        const std::string& name) {
  if (!j.is_array() || j.size() != rows)
    bad_field(name, "expected " + std::to_string(rows) + " rows");
  FieldMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      bad_field(name, "row " + std::to_string(r) + " must have " +
                          std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, read_entry(row[c], f, name));
  }
  return m;
}

}  // namespace

Instance instance_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw InvariantError("instance: top level must be an object");
  for (const char* key : {"p", "seed", "provenance", "W", "M"})
    if (!j.contains(key)) bad_field(key, "missing");

  if (!j["p"].is_number_integer() && !j["p"].is_number_unsigned())
    bad_field("p", "not an integer");
  PrimeField f = [&] {
    try {
      return PrimeField(j["p"].get<std::uint32_t>());
    } catch (const std::exception& e) {
      bad_field("p", e.what());
    }
  }();

  if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
    bad_field("seed", "not an integer");
  std::uint64_t seed = j["seed"].get<std::uint64_t>();

  if (!j["provenance"].is_string()) bad_field("provenance", "not a string");
  std::string prov = j["provenance"].get<std::string>();
  if (prov != "random" && prov != "engineered")
    bad_field("provenance", "must be 'random' or 'engineered'");

  FieldMatrix wm = read_matrix(j["W"], f, kDimV, kDimW2, "W");
  if (wm.rank() != kDimV) bad_field("W", "rows are not independent");
  Subspace W = Subspace::row_space(wm);
  if (!(W.basis() == wm)) bad_field("W", "basis is not row-reduced");

  FieldMatrix mm = read_matrix(j["M"], f, kDimW2 - kDimV, kDimW2, "M");
  Subspace M = W.annihilator();
  if (!(M.basis() == mm)) bad_field("M", "not the annihilator of W");

  std::optional<PluckerVector> wx;
  std::optional<TwoForm> wy;
  if (j.contains("witnesses")) {
    const auto& wit = j["witnesses"];
    if (!wit.is_object() || !wit.contains("x") || !wit.contains("y"))
      bad_field("witnesses", "expected an object with 'x' and 'y'");
    if (!wit["x"].is_array() || wit["x"].size() != kDimW2)
      bad_field("witnesses.x", "expected 21 coordinates");
    std::array<std::uint32_t, kDimW2> xs{};
    for (int k = 0; k < kDimW2; ++k)
      xs[k] = read_entry(wit["x"][k], f, "witnesses.x");
    PluckerVector x(f, xs);
    if (x.is_zero()) bad_field("witnesses.x", "must be nonzero");
    try {
      decompose_plucker(x);
    } catch (const std::exception&) {
      bad_field("witnesses.x", "not a decomposable bivector");
    }
    if (!M.contains(x.coords())) bad_field("witnesses.x", "not in M");

    FieldMatrix ymat = read_matrix(wit["y"], f, kDimV, kDimV, "witnesses.y");
    if (!ymat.is_skew()) bad_field("witnesses.y", "matrix is not antisymmetric");
    TwoForm y = TwoForm::from_matrix(std::move(ymat));
    if (!W.contains(y.coords())) bad_field("witnesses.y", "not in W");
    auto [rank, ker] = form_rank_kernel(y);
    if (rank != 4) bad_field("witnesses.y", "rank must be 4");
    if (!ker.contains(decompose_plucker(x).as_subspace()))
      bad_field("witnesses.y", "kernel does not contain the plane of x");
    wx = x;
    wy = y;
  } else if (prov == "engineered") {
    bad_field("witnesses", "required for engineered instances");
  }

  return Instance{f, seed, prov, W, M, wx, wy};
}

std::uint64_t instance_hash(const Instance& inst) {
  std::string s = instance_to_json(inst).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gpdual
