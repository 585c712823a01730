#include "vermacrit/suites.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

namespace vermacrit {

namespace {

std::string plural(long n, const char* what) { return std::to_string(n) + " " + what; }

// ---------------------------------------------------------------- weights

std::vector<Rat> default_finite(int rank) {
  const long primes[] = {7, 11, 13, 17, 19};
  std::vector<Rat> v;
  for (int i = 0; i < rank; ++i) v.push_back(Rat(1, primes[i % 5]));
  return v;
}

}  // namespace

Weight make_lambda(const AffineAlgebra& alg, const RunConfig& cfg) {
  std::vector<Rat> finite =
      cfg.lambda_finite.empty() ? default_finite(alg.rank()) : cfg.lambda_finite;
  if (static_cast<int>(finite.size()) != alg.rank())
    throw std::runtime_error("lambda needs " + std::to_string(alg.rank()) +
                             " finite coordinates");
  std::vector<Rat> v = finite;
  v.push_back(cfg.level ? *cfg.level : alg.critical_level());
  v.push_back(cfg.d_value);
  return Weight(std::move(v));
}

Weight make_xi(const AffineAlgebra& alg, const RunConfig& cfg) {
  if (!cfg.xi.empty()) {
    if (static_cast<int>(cfg.xi.size()) != alg.hdim())
      throw std::runtime_error("xi needs " + std::to_string(alg.hdim()) + " coordinates");
    return Weight(cfg.xi);
  }
  std::vector<Rat> v(alg.hdim(), Rat(0));
  v[alg.rank()] = Rat(1);  // Lambda_0: value 1 on K, so (xi, delta) = 1
  return Weight(std::move(v));
}

TruncationWindow make_window(const AffineAlgebra& alg, const RunConfig& cfg) {
  TruncationWindow w;
  w.max_delta_degree = cfg.smax;
  w.max_height = cfg.height_max > 0 ? cfg.height_max : cfg.smax * alg.delta_nu().height();
  return w;
}

namespace {

// Shared per-suite state: algebra, window, contexts and the certified
// critical weight.
struct Lab {
  AffineAlgebra alg;
  TruncationWindow window;
  PBWContext plus;
  Weight lambda;
  Weight xi;

  explicit Lab(const RunConfig& cfg)
      : alg(build_from_catalog(cfg.algebra)),
        window(make_window(alg, cfg)),
        plus(&alg, window, OrderKind::PlusAdapted),
        lambda(make_lambda(alg, cfg)),
        xi(make_xi(alg, cfg)) {}

  VermaModule<Rat> module() { return VermaModule<Rat>(&plus, WeightT<Rat>(lambda.v)); }

  VermaModule<Poly> deformed_module() {
    return VermaModule<Poly>(&plus, deformed_weight(lambda, xi));
  }
};

void certify_generic(Lab& lab, VermaModule<Rat>& M, SuiteResult& R) {
  GenericityReport rep = is_generic_critical(lab.alg, lab.lambda, lab.window);
  M.generic_certified = rep.ok();
  std::string detail;
  for (const auto& [nu, k] : rep.witnesses)
    detail += " (" + nu.str() + ", k=" + std::to_string(k) + ")";
  R.add("lambda is certified generic critical", rep.ok(),
        rep.ok() ? "level " + lab.lambda.v[lab.alg.rank()].get_str() : "witnesses:" + detail);
  if (!rep.ok()) throw GenericityUnverified("the configured weight is not generic critical");
}

// Positions of the pure-H monomials of degree s inside their weight space.
struct SBasis {
  std::vector<MonoId> monos;
  std::map<MonoId, int> pos;
  std::vector<int> parts;  // number of factors per monomial

  SBasis(PBWContext& ctx, int s) {
    monos = s_basis(ctx, s);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      pos[monos[i]] = static_cast<int>(i);
      int p = 0;
      for (auto [g, e] : ctx.mono(monos[i]).f) p += e;
      parts.push_back(p);
    }
  }

  std::vector<Rat> coords(const RatVector& hc_image) const {
    std::vector<Rat> out(monos.size(), Rat(0));
    for (const auto& [m, c] : hc_image.terms) out[pos.at(m)] = c;
    return out;
  }
};

Matrix<Rat> intersect_rows(const Matrix<Rat>& A, const Matrix<Rat>& B, std::size_t cols) {
  // Rows x with x in rowspan(A) and rowspan(B): solve a^T A - b^T B = 0.
  const std::size_t ra = A.size(), rb = B.size();
  Matrix<Rat> sys(cols, std::vector<Rat>(ra + rb, Rat(0)));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = 0; i < ra; ++i) sys[c][i] = A[i][c];
    for (std::size_t j = 0; j < rb; ++j) sys[c][ra + j] = -B[j][c];
  }
  Matrix<Rat> ker = nullspace(std::move(sys), ra + rb);
  Matrix<Rat> out;
  for (const auto& sol : ker) {
    std::vector<Rat> v(cols, Rat(0));
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t c = 0; c < cols; ++c) v[c] += sol[i] * A[i][c];
    out.push_back(std::move(v));
  }
  rref(out);
  return out;
}

bool spans_equal(const Matrix<Rat>& A, const Matrix<Rat>& B, std::size_t cols) {
  EchelonSpan sa(cols), sb(cols);
  for (const auto& r : A) sa.add(r);
  for (const auto& r : B) sb.add(r);
  if (sa.dim() != sb.dim()) return false;
  for (const auto& r : A)
    if (!sb.contains(r)) return false;
  return true;
}

// ------------------------------------------------------------ suite: algebra

SuiteResult suite_algebra(const RunConfig& cfg) {
  (void)cfg;
  SuiteResult R;
  R.suite = "algebra";
  json rows = json::array();
  for (const auto& name : catalog_names()) {
    FiniteSuperAlgebra g = build_from_catalog(name);  // validates the tables
    AffineAlgebra A(std::move(g));
    bool ok = true;
    std::string detail;
    try {
      A.validate(6);
    } catch (const ValidationFailure& e) {
      ok = false;
      detail = e.what();
    }
    R.add(name + ": finite tables + affine Jacobi/invariance, |m| <= 6", ok, detail);

    // Lemma: [x, y] = m (x|y) K on the imaginary part, |m| <= 6.
    bool pairing_ok = true;
    for (int m = 1; m <= 6 && pairing_ok; ++m)
      for (int i = 0; i < A.rank() && pairing_ok; ++i)
        for (int j = 0; j < A.rank(); ++j) {
          AffKey x = AffKey::loop(A.g().cartan[i], m), y = AffKey::loop(A.g().cartan[j], -m);
          AffElt br = A.bracket(x, y);
          AffElt expect;
          expect.add(AffKey::central(), Rat(m) * A.form_pair(x, y));
          for (const auto& t : br.terms) expect.add(t.key, -t.coef);
          if (!expect.is_zero()) {
            pairing_ok = false;
            break;
          }
        }
    R.add(name + ": [x,y] = m(x|y)K on imaginary root spaces", pairing_ok);

    // H_- even and abelian; sigma maps the splits as expected.
    bool split_ok = true;
    for (int i = 0; i < A.g().dim && split_ok; ++i)
      for (int m = -6; m <= 6; ++m) {
        AffKey k = AffKey::loop(i, m);
        auto [sk, sc] = A.sigma(k);
        (void)sc;
        SplitBlock b = A.split_block(k), sb = A.split_block(sk);
        if (b == SplitBlock::H && A.g().parity[i] != 0) split_ok = false;
        if ((b == SplitBlock::NPlus && sb != SplitBlock::NMinus) ||
            (b == SplitBlock::NMinus && sb != SplitBlock::NPlus))
          split_ok = false;
        if (A.in_n_minus_hat(k) != A.in_n_hat(sk)) split_ok = false;
      }
    R.add(name + ": split tables and sigma(N^+) = N^-_-", split_ok);

    rows.push_back({{"name", name},
                    {"dim", A.g().dim},
                    {"rank", A.rank()},
                    {"dual_coxeter", rat_json(A.dual_coxeter())}});
  }
  R.data["algebras"] = rows;
  return R;
}

// ------------------------------------------------------- suite: shapovalov

SuiteResult suite_shapovalov(const RunConfig& cfg) {
  SuiteResult R;
  R.suite = "shapovalov-det";
  AffineAlgebra alg(build_from_catalog(cfg.algebra));
  TruncationWindow w{cfg.nu_max_delta, cfg.nu_max_height};
  TruncatedCharacter tau = ch_verma(alg, w);

  // Three fixed independent directions, each pairing nontrivially with
  // every window root (checked).
  std::vector<Weight> dirs;
  {
    const Rat lead[3] = {Rat(1), Rat(1, 2), Rat(1, 3)};
    const long nums[3][2] = {{1, 1}, {-1, 2}, {2, -3}};
    const long dens[3][2] = {{2, 3}, {3, 5}, {7, 11}};
    for (int d = 0; d < 3; ++d) {
      std::vector<Rat> v;
      for (int i = 0; i < alg.rank(); ++i) v.push_back(Rat(nums[d][i % 2], dens[d][i % 2]));
      v.push_back(lead[d]);
      v.push_back(Rat(0));
      dirs.emplace_back(std::move(v));
      check_line_direction(alg, dirs.back(), w);
    }
  }
  Weight base = make_lambda(alg, [&] {
    RunConfig c = cfg;
    c.level = Rat(1, 5);
    return c;
  }());

  json rows = json::array();
  std::vector<NuVec> grid = window_grid(alg.rank(), w);
  for (int d = 0; d < 3; ++d) {
    LambdaLine line{base, dirs[d]};
    PBWContext ctx(&alg, w, OrderKind::PlusAdapted);
    VermaModule<Poly> M(&ctx, line_weight(line));
    bool all_match = true, all_deg = true;
    long spaces = 0;
    for (const auto& nu : grid) {
      if (nu.is_zero() || tau.at(nu) == 0) continue;
      DetCheck chk = det_vs_product_check(M, line, nu, tau);
      all_match = all_match && chk.match;
      all_deg = all_deg && chk.degree_match;
      ++spaces;
      if (d == 0)
        rows.push_back({{"nu", nu_json(nu)},
                        {"dim", chk.dim},
                        {"det_degree", chk.det_degree},
                        {"match", chk.match},
                        {"ratio_constant", rat_json(chk.ratio)}});
    }
    R.add("line " + std::to_string(d + 1) + ": det degree = product degree", all_deg,
          plural(spaces, "weight spaces"));
    R.add("line " + std::to_string(d + 1) + ": det = c * KK product", all_match);
  }
  R.data["rows"] = rows;
  return R;
}

// ------------------------------------------------------------ suite: thm01

SuiteResult suite_thm01(const RunConfig& cfg) {
  SuiteResult R;
  R.suite = "thm01";
  Lab lab(cfg);
  PBWContext minus(&lab.alg, lab.window, OrderKind::MinusAdapted);
  VermaModule<Rat> M = lab.module();
  certify_generic(lab, M, R);
  TruncatedCharacter tau = ch_verma(lab.alg, lab.window);

  std::vector<std::vector<RatVector>> sing(cfg.smax + 1);
  json dim_rows = json::array();
  for (int s = 1; s <= cfg.smax; ++s) {
    sing[s] = singular_vectors(M, s);
    SBasis sb(lab.plus, s);

    bool dim_ok = sing[s].size() == sb.monos.size();
    R.add("dim of singular space at s=" + std::to_string(s) + " equals dim S", dim_ok,
          plural(sing[s].size(), "vectors"));

    // HC_+ and HC_- are bijections onto S_{-s delta}.
    EchelonSpan plus_im(sb.monos.size()), minus_im(sb.monos.size());
    for (const auto& v : sing[s]) {
      plus_im.add(sb.coords(hc_plus(lab.plus, v)));
      minus_im.add(sb.coords(hc_minus(lab.plus, minus, v)));
    }
    R.add("HC_+ bijective on singular vectors, s=" + std::to_string(s),
          plus_im.dim() == sing[s].size() && plus_im.dim() == sb.monos.size());
    R.add("HC_- bijective on singular vectors, s=" + std::to_string(s),
          minus_im.dim() == sing[s].size() && minus_im.dim() == sb.monos.size());

    // Lemma primcrit: annihilation by N^+ + H already forces singularity.
    std::vector<AffKey> q_ops;
    for (const auto& [e, f] : lab.alg.chevalley()) {
      (void)f;
      if (lab.alg.split_block(e) == SplitBlock::NPlus) q_ops.push_back(e);
    }
    for (int m = 1; m <= lab.window.max_delta_degree; ++m)
      for (int j = 0; j < lab.alg.rank(); ++j)
        q_ops.push_back(AffKey::loop(lab.alg.g().cartan[j], m));
    auto weak = annihilated_by(M, s, q_ops);
    bool prim_ok = weak.size() == sing[s].size();
    if (prim_ok) {
      EchelonSpan span(lab.plus.weight_basis(s * lab.alg.delta_nu()).size());
      for (const auto& v : sing[s]) span.add(coords(lab.plus, s * lab.alg.delta_nu(), v));
      for (const auto& v : weak)
        prim_ok = prim_ok && span.contains(coords(lab.plus, s * lab.alg.delta_nu(), v));
    }
    R.add("primcrit: (N^+ + H)-annihilated = singular, s=" + std::to_string(s), prim_ok);

    // Casimir constraint: 2(lambda + rho, s delta) = (s delta, s delta) = 0.
    std::vector<Rat> sd = lab.alg.functional_of_nu(s * lab.alg.delta_nu());
    R.add("Casimir: 2(lambda+rho, s delta) = (s delta, s delta), s=" + std::to_string(s),
          is_zero(lab.alg.lam_rho_pair(lab.lambda, sd)) && is_zero(lab.alg.fn_pair(sd, sd)));

    // Orthogonality: singular vectors are orthogonal to Ker HC_-.
    bool orth_ok = true;
    for (MonoId m : minus.weight_basis(s * lab.alg.delta_nu())) {
      if (is_pure_H(minus, m)) continue;
      RatVector km;
      km.add(m, Rat(1));
      RatVector in_plus = reorder(km, minus, lab.plus);
      for (const auto& v : sing[s]) {
        Rat acc(0);
        for (const auto& [mi, ci] : in_plus.terms) {
          RatVector vi = v;
          acc += ci * M.shapovalov_pair(mi, vi);
        }
        if (!is_zero(acc)) orth_ok = false;
      }
    }
    R.add("orthogonality: S(singular, Ker HC_-) = 0, s=" + std::to_string(s), orth_ok);

    dim_rows.push_back({{"s", s}, {"singular_dim", sing[s].size()}, {"S_dim", sb.monos.size()}});
  }
  R.data["singular_dims"] = dim_rows;

  // HC_+ is an algebra homomorphism on products of singular vectors.
  bool mult_ok = true, prod_singular_ok = true;
  long pairs = 0;
  for (int si = 1; si <= cfg.smax; ++si)
    for (int sj = si; si + sj <= cfg.smax; ++sj)
      for (const auto& v : sing[si])
        for (const auto& w : sing[sj]) {
          RatVector p = singular_product(M, v, w);
          RatVector lhs = hc_plus(lab.plus, p);
          RatVector rhs = lab.plus.vec_mul(hc_plus(lab.plus, v), hc_plus(lab.plus, w));
          rhs.add_scaled(lhs, Rat(-1));
          mult_ok = mult_ok && rhs.is_zero();
          for (const auto& [e, f] : lab.alg.chevalley()) {
            (void)f;
            NuVec target = lab.plus.drop_of(p.terms[0].first) - lab.alg.weight_nu(e);
            if (!target.nonneg()) continue;
            if (!M.act(e, p).is_zero()) prod_singular_ok = false;
          }
          ++pairs;
        }
  R.add("HC_+(v w) = HC_+(v) HC_+(w) on singular products", mult_ok, plural(pairs, "products"));
  R.add("products of singular vectors are singular", prod_singular_ok);

  // Theorem 0.1(iii): each low-degree singular vector generates a shifted
  // Verma: graded dims tau(nu - s delta).
  for (int s = 1; s <= std::min(cfg.smax, 2); ++s) {
    bool ok = true;
    for (const auto& v : sing[s]) {
      SpanTable span = submodule_span(M, {v});
      for (const auto& nu : window_grid(lab.alg.rank(), lab.window)) {
        NuVec shifted = nu - s * lab.alg.delta_nu();
        long expect = shifted.nonneg() ? tau.at(shifted) : 0;
        if (span.dim_at(nu) != expect) ok = false;
      }
    }
    R.add("thm01(iii): span of each s=" + std::to_string(s) + " singular vector is M(lambda-s delta)",
          ok);
  }
  return R;
}

// ------------------------------------------------------- suite: characters

SuiteResult suite_characters(const RunConfig& cfg) {
  SuiteResult R;
  R.suite = "characters";
  Lab lab(cfg);
  VermaModule<Rat> M = lab.module();
  certify_generic(lab, M, R);

  TruncatedCharacter tau = ch_verma(lab.alg, lab.window);
  TruncatedCharacter simple = kk_character(lab.alg, lab.window);
  TruncatedCharacter s_table = ch_S(lab.alg, lab.window);

  R.add("ch M = ch L * ch S over the window",
        tau == convolve(simple, s_table, lab.alg.rank(), lab.window));

  // Brute-force simple character: codimension of the span of all singular
  // vectors of degrees 1..smax.
  std::vector<RatVector> all_sing;
  std::vector<std::vector<RatVector>> sing(cfg.smax + 1);
  for (int s = 1; s <= cfg.smax; ++s) {
    sing[s] = singular_vectors(M, s);
    for (const auto& v : sing[s]) all_sing.push_back(v);
  }
  SpanTable span = submodule_span(M, all_sing);
  TruncatedCharacter brute;
  for (const auto& nu : window_grid(lab.alg.rank(), lab.window))
    brute.table[nu] = tau.at(nu) - span.dim_at(nu);
  R.add("Kac-Kazhdan formula: brute-force ch L equals the real-root product", brute == simple);

  json tbl = json::array();
  for (const auto& nu : window_grid(lab.alg.rank(), lab.window))
    tbl.push_back({{"nu_coords", nu_json(nu)}, {"dim", simple.at(nu)}});
  R.data["kk_character"] = tbl;

  // cor01 for N generated by the s=1 singular vectors: ch N = ch L * ch H(N).
  if (!sing[1].empty()) {
    SpanTable nspan = submodule_span(M, {sing[1][0]});
    TruncatedCharacter h_table;
    for (int s = 0; s <= cfg.smax; ++s) {
      NuVec sd = s * lab.alg.delta_nu();
      SBasis sb(lab.plus, s);
      const auto& wb = lab.plus.weight_basis(sd);
      // Singular vectors of M inside N.
      Matrix<Rat> sing_rows, span_rows;
      std::vector<RatVector> ss = s == 0 ? std::vector<RatVector>{} : sing[s];
      if (s == 0) {
        RatVector unit;
        unit.add(lab.plus.one(), Rat(1));
        ss.push_back(unit);
      }
      for (const auto& v : ss) sing_rows.push_back(coords(lab.plus, sd, v));
      auto it = nspan.spaces.find(sd);
      if (it != nspan.spaces.end())
        for (const auto& r : it->second.rows()) span_rows.push_back(r);
      Matrix<Rat> inter = intersect_rows(sing_rows, span_rows, wb.size());
      EchelonSpan hc_im(sb.monos.size());
      for (const auto& row : inter) {
        RatVector v;
        for (std::size_t i = 0; i < row.size(); ++i) v.add(wb[i], row[i]);
        hc_im.add(sb.coords(hc_plus(lab.plus, v)));
      }
      h_table.table[sd] = static_cast<long>(hc_im.dim());
    }
    TruncatedCharacter rhs = convolve(simple, h_table, lab.alg.rank(), lab.window);
    bool ok = true;
    for (const auto& nu : window_grid(lab.alg.rank(), lab.window))
      if (nspan.dim_at(nu) != rhs.at(nu)) ok = false;
    R.add("cor01: ch N = ch L * ch H(N) for N = U(g) (s=1 singular vector)", ok);
  }
  return R;
}

// ------------------------------------------------------ suite: sum-formula

SuiteResult suite_sum_formula(const RunConfig& cfg) {
  SuiteResult R;
  R.suite = "sum-formula";
  Lab lab(cfg);
  VermaModule<Rat> M = lab.module();
  certify_generic(lab, M, R);
  VermaModule<Poly> Mdef = lab.deformed_module();
  TruncatedCharacter tau = ch_verma(lab.alg, lab.window);

  bool all_sum = true, all_census = true, eval_ok = true;
  long spaces = 0;
  json rows = json::array();
  for (const auto& nu : window_grid(lab.alg.rank(), lab.window)) {
    if (nu.is_zero() || tau.at(nu) == 0) continue;
    JantzenLayers layers = jantzen_layers(Mdef, nu);
    SumFormulaCheck chk = sum_formula_check(Mdef, layers, tau);
    all_sum = all_sum && chk.match;
    all_census = all_census && chk.census_match;
    ++spaces;
    rows.push_back({{"nu", nu_json(nu)},
                    {"dims", layers.dims},
                    {"valuation", layers.valuation},
                    {"census", chk.imaginary_census}});
    // Specialization consistency: the deformed Gram at x=0 matches the
    // Gram at lambda.
    if (spaces <= 8) {
      Matrix<Poly> G = Mdef.gram_matrix(nu);
      Matrix<Rat> G0 = M.gram_matrix(nu);
      for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j)
          if (G[i][j].eval(Rat(0)) != G0[i][j]) eval_ok = false;
    }
  }
  R.add("Jantzen sum formula: sum of layer dims = x-valuation of det", all_sum,
        plural(spaces, "weight spaces"));
  R.add("critical census: valuation = sum of tau(nu - m s delta)", all_census);
  R.add("deformed Gram specializes to the Gram at x=0", eval_ok);
  R.data["layers"] = rows;
  R.data["lambda"] = weight_json(lab.lambda);
  R.data["xi"] = weight_json(lab.xi);
  return R;
}

// ------------------------------------------------------------ suite: thm02

SuiteResult suite_thm02(const RunConfig& cfg) {
  SuiteResult R;
  R.suite = "thm02";
  Lab lab(cfg);
  PBWContext minus(&lab.alg, lab.window, OrderKind::MinusAdapted);
  VermaModule<Rat> M = lab.module();
  certify_generic(lab, M, R);
  VermaModule<Poly> Mdef = lab.deformed_module();
  VermaModule<LocalRat> Mloc(&lab.plus, [&] {
    WeightT<LocalRat> lamx;
    WeightT<Poly> p = deformed_weight(lab.lambda, lab.xi);
    for (const auto& c : p.v) lamx.v.push_back(LocalRat(c));
    return lamx;
  }());
  HcInverse hcinv(&Mloc);

  TruncatedCharacter simple = kk_character(lab.alg, lab.window);
  std::unordered_map<NuVec, JantzenLayers, NuVecHash> all_layers;
  TruncatedCharacter tau = ch_verma(lab.alg, lab.window);
  for (const auto& nu : window_grid(lab.alg.rank(), lab.window)) {
    if (nu.is_zero() || tau.at(nu) == 0) continue;
    all_layers.emplace(nu, jantzen_layers(Mdef, nu));
  }

  json srows = json::array();
  for (int s = 1; s <= cfg.smax; ++s) {
    NuVec sd = s * lab.alg.delta_nu();
    const auto& wb = lab.plus.weight_basis(sd);
    SBasis sb(lab.plus, s);
    const JantzenLayers& layers = all_layers.at(sd);

    // Claim (B): layer dims at s delta = convolution of ch L with ch S^{>=k}.
    bool conv_ok = true;
    std::vector<long> expect_dims;
    for (int k = 0;; ++k) {
      TruncatedCharacter sk = ch_S_geq(lab.alg, lab.window, k);
      long expect = 0;
      for (int j = 0; j <= s; ++j)
        expect += sk.at(j * lab.alg.delta_nu()) * simple.at((s - j) * lab.alg.delta_nu());
      expect_dims.push_back(expect);
      long got = k < static_cast<int>(layers.dims.size()) ? layers.dims[k] : 0;
      if (got != expect) conv_ok = false;
      if (expect == 0) break;
    }
    R.add("layer dims at s=" + std::to_string(s) + " match dim L (*) dim S^{>=k}", conv_ok);

    // Singular space at x=0 and HC_+ spans of layer-intersections.
    std::vector<RatVector> sing = singular_vectors(M, s);
    Matrix<Rat> sing_rows;
    for (const auto& v : sing) sing_rows.push_back(coords(lab.plus, sd, v));

    bool span_ok = true, nest_ok = true;
    for (int k = 0; k + 1 < static_cast<int>(layers.dims.size()); ++k) {
      Matrix<Rat> layer_rows;
      if (k == 0) {
        layer_rows.assign(wb.size(), std::vector<Rat>(wb.size(), Rat(0)));
        for (std::size_t i = 0; i < wb.size(); ++i) layer_rows[i][i] = Rat(1);
      } else {
        layer_rows = layers.layer_basis(k);
      }
      // Layer nesting.
      if (k >= 1) {
        Matrix<Rat> prev = k == 1 ? Matrix<Rat>() : layers.layer_basis(k - 1);
        EchelonSpan prev_span(wb.size());
        if (k == 1)
          for (std::size_t i = 0; i < wb.size(); ++i) {
            std::vector<Rat> e(wb.size(), Rat(0));
            e[i] = Rat(1);
            prev_span.add(e);
          }
        else
          for (const auto& r : prev) prev_span.add(r);
        for (const auto& r : layer_rows)
          if (!prev_span.contains(r)) nest_ok = false;
      }

      Matrix<Rat> inter = intersect_rows(sing_rows, layer_rows, wb.size());
      EchelonSpan hc_im(sb.monos.size());
      for (const auto& row : inter) {
        RatVector v;
        for (std::size_t i = 0; i < row.size(); ++i) v.add(wb[i], row[i]);
        hc_im.add(sb.coords(hc_plus(lab.plus, v)));
      }
      // Span of S^{>=k}: monomials with at least k factors.
      Matrix<Rat> sk_rows;
      for (std::size_t i = 0; i < sb.monos.size(); ++i) {
        if (sb.parts[i] < k) continue;
        std::vector<Rat> e(sb.monos.size(), Rat(0));
        e[i] = Rat(1);
        sk_rows.push_back(std::move(e));
      }
      Matrix<Rat> hc_rows;
      for (const auto& r : hc_im.rows()) hc_rows.push_back(r);
      if (!spans_equal(hc_rows, sk_rows, sb.monos.size())) span_ok = false;
    }
    R.add("thm02: HC_+(singular in layer k) spans S^{>=k}, s=" + std::to_string(s), span_ok);
    R.add("layer nesting F^{k+1} inside F^k at s=" + std::to_string(s), nest_ok);

    // Prop propAA: the deformed vector HC^{-1}(z) lies in F^{deg z}.
    bool aa_ok = true;
    for (std::size_t i = 0; i < sb.monos.size(); ++i) {
      const GradedVector<LocalRat>& v = hcinv.of(sb.monos[i]);
      if (membership_degree_local(Mloc, v) < sb.parts[i]) aa_ok = false;
    }
    R.add("propAA: HC^{-1}(z) lies in F^{deg z}, s=" + std::to_string(s), aa_ok);

    srows.push_back({{"s", s}, {"dims", layers.dims}, {"expected", expect_dims}});
  }
  R.data["thm02"] = srows;

  // Evaluated layers are submodules: closed under lowering, and raising maps
  // layer k at nu into layer k at nu - alpha.
  bool submodule_ok = true;
  for (const auto& [nu, layers] : all_layers) {
    for (int k = 1; k + 1 < static_cast<int>(layers.dims.size()); ++k) {
      Matrix<Rat> basis = layers.layer_basis(k);
      for (const auto& row : basis) {
        RatVector v = from_coords(lab.plus, nu, row);
        // Lowering by every window generator.
        for (std::size_t gi = 0; gi < lab.plus.gens().size(); ++gi) {
          NuVec target = nu + lab.plus.gen(gi).drop;
          if (!lab.window.contains(target)) continue;
          auto it = all_layers.find(target);
          if (it == all_layers.end()) continue;
          RatVector lowered;
          for (const auto& [mm, cc] : v.terms)
            lowered.add_scaled(lab.plus.insert_left(static_cast<uint16_t>(gi), mm), cc);
          if (lowered.is_zero()) continue;
          EchelonSpan span(lab.plus.weight_basis(target).size());
          for (const auto& r : it->second.layer_basis(k)) span.add(r);
          if (!span.contains(coords(lab.plus, target, lowered))) submodule_ok = false;
        }
        // Raising by the Chevalley generators.
        for (const auto& [e, f] : lab.alg.chevalley()) {
          (void)f;
          NuVec target = nu - lab.alg.weight_nu(e);
          if (!target.nonneg() || !lab.window.contains(target)) continue;
          RatVector raised = M.act(e, v);
          if (raised.is_zero()) continue;
          auto it = all_layers.find(target);
          if (it == all_layers.end()) {
            submodule_ok = false;
            continue;
          }
          EchelonSpan span(lab.plus.weight_basis(target).size());
          for (const auto& r : it->second.layer_basis(k)) span.add(r);
          if (!span.contains(coords(lab.plus, target, raised))) submodule_ok = false;
        }
      }
    }
  }
  R.add("evaluated layers are submodules within the window", submodule_ok);

  // Eq (sumMS) restricted to imaginary drops: sum_k ch M^k = (ch M / ch S)
  // sum_k ch S^{>=k}, via the windowed identity
  // sum_k ch M^k = ch L * sum_k ch S^{>=k}.
  bool summs_ok = true;
  for (int s = 1; s <= cfg.smax; ++s) {
    NuVec sd = s * lab.alg.delta_nu();
    const JantzenLayers& layers = all_layers.at(sd);
    long lhs = 0;
    for (std::size_t k = 1; k < layers.dims.size(); ++k) lhs += layers.dims[k];
    long rhs = 0;
    for (int k = 1; k <= cfg.smax; ++k) {
      TruncatedCharacter sk = ch_S_geq(lab.alg, lab.window, k);
      for (int j = 0; j <= s; ++j)
        rhs += sk.at(j * lab.alg.delta_nu()) * simple.at((s - j) * lab.alg.delta_nu());
    }
    if (lhs != rhs) summs_ok = false;
  }
  R.add("eq (sumMS) degreewise at imaginary drops", summs_ok);
  return R;
}

// -------------------------------------------------------- suite: construct

SuiteResult suite_construct(const RunConfig& cfg) {
  SuiteResult R;
  R.suite = "construct";
  Lab lab(cfg);
  PBWContext minus(&lab.alg, lab.window, OrderKind::MinusAdapted);
  VermaModule<Rat> M = lab.module();
  certify_generic(lab, M, R);

  auto local_weight = [&] {
    WeightT<LocalRat> lamx;
    for (const auto& c : deformed_weight(lab.lambda, lab.xi).v) lamx.v.push_back(LocalRat(c));
    return lamx;
  };
  VermaModule<LocalRat> Mloc(&lab.plus, local_weight());
  VermaModule<LocalRat> Mloc_minus(&minus, local_weight());
  HcInverse hcinv(&Mloc);

  // Shift operator identities.
  {
    bool ok = true;
    const auto& g = lab.alg.g();
    for (int m = 1; m <= 2 && ok; ++m)
      for (int i = 0; i < g.dim && ok; ++i)
        for (int j = 0; j < g.dim; ++j)
          for (int di = 0; di <= 1; ++di)
            for (int dj = 0; dj <= 1; ++dj) {
              AffKey x = AffKey::loop(i, di), y = AffKey::loop(j, dj);
              NuVec wsum = lab.alg.weight_nu(x) + lab.alg.weight_nu(y);
              if (wsum.is_zero() || wsum == m * lab.alg.delta_nu()) continue;
              // T_m([x,y]) = [x, T_m(y)] when the weight sum avoids 0, m delta.
              AffElt lhs_raw = lab.alg.bracket(x, y);
              AffElt lhs;
              for (const auto& t : lhs_raw.terms) {
                if (t.key.kind != AffKey::Loop) {
                  ok = false;
                  continue;
                }
                lhs.add(shift_T(m, t.key), t.coef);
              }
              AffElt rhs = lab.alg.bracket(x, shift_T(m, y));
              for (const auto& t : rhs.terms) lhs.add(t.key, -t.coef);
              if (!lhs.is_zero()) ok = false;
            }
    R.add("T_m([x,y]) = [x, T_m(y)] away from weights {0, m delta}", ok);
    bool loop_guard = false;
    try {
      shift_T(1, AffKey::central());
    } catch (const NotLoopElement&) {
      loop_guard = true;
    }
    R.add("T_m rejects K and D", loop_guard);
  }

  // HC round trip, singularity at x=0, span match, propAA, for every
  // monomial z of degree <= min(smax, 3).
  const int zmax = std::min(cfg.smax, 3);
  json zrows = json::array();
  for (int s = 1; s <= zmax; ++s) {
    NuVec sd = s * lab.alg.delta_nu();
    SBasis sb(lab.plus, s);
    std::vector<RatVector> sing = singular_vectors(M, s);
    EchelonSpan sing_span(lab.plus.weight_basis(sd).size());
    for (const auto& v : sing) sing_span.add(coords(lab.plus, sd, v));

    bool round_ok = true, sing_ok = true, span_ok = true, aa_ok = true;
    EchelonSpan constructed_span(lab.plus.weight_basis(sd).size());
    for (std::size_t i = 0; i < sb.monos.size(); ++i) {
      const GradedVector<LocalRat>& v = hcinv.of(sb.monos[i]);
      // HC_+ round trip over the deformed ring.
      GradedVector<LocalRat> hc = hc_project(lab.plus, v);
      GradedVector<LocalRat> expect;
      expect.add(sb.monos[i], RingOps<LocalRat>::one());
      expect.add_scaled(hc, LocalRat(Rat(-1)));
      if (!expect.is_zero()) round_ok = false;

      // Evaluated at x=0: annihilated by all Chevalley raisings.
      RatVector v0 = hcinv.at_zero(sb.monos[i]);
      for (const auto& [e, f] : lab.alg.chevalley()) {
        (void)f;
        NuVec target = sd - lab.alg.weight_nu(e);
        if (!target.nonneg()) continue;
        if (!M.act(e, v0).is_zero()) sing_ok = false;
      }
      if (!sing_span.contains(coords(lab.plus, sd, v0))) span_ok = false;
      constructed_span.add(coords(lab.plus, sd, v0));

      if (membership_degree_local(Mloc, v) < sb.parts[i]) aa_ok = false;
    }
    span_ok = span_ok && constructed_span.dim() == sing_span.dim() &&
              constructed_span.dim() == sb.monos.size();
    R.add("HC_+(HC^{-1}(z)) = z for all z of degree " + std::to_string(s), round_ok);
    R.add("HC^{-1}(z) singular at x=0, s=" + std::to_string(s), sing_ok);
    R.add("HC^{-1} basis spans the nullspace singular space, s=" + std::to_string(s), span_ok);
    R.add("propAA: membership degree >= deg z, s=" + std::to_string(s), aa_ok);
    zrows.push_back({{"s", s}, {"monomials", sb.monos.size()}});
  }
  R.data["hc_inverse"] = zrows;

  // psiw3: HC^{-1}(a(-m) z) = phi(HC^{-1}(a(-m))) where phi(v_lambda) = HC^{-1}(z).
  if (zmax >= 2) {
    bool ok = true;
    const auto& g = lab.alg.g();
    for (int m = 1; m + 1 <= zmax; ++m) {
      // z = h_1(-1)^{...}; use z = h_1(-1) and a(-m) = h_1(-m).
      int g_hm = lab.plus.gen_index(AffKey::loop(g.cartan[0], -m));
      int g_h1 = lab.plus.gen_index(AffKey::loop(g.cartan[0], -1));
      if (g_hm < 0 || g_h1 < 0) continue;
      Mono zm;
      zm.f.push_back({static_cast<uint16_t>(g_h1), 1});
      MonoId z = lab.plus.intern(zm);
      RatVector w1 = [&] {
        Mono am;
        am.f.push_back({static_cast<uint16_t>(g_hm), 1});
        return hcinv.at_zero(lab.plus.intern(am));
      }();
      RatVector w2 = hcinv.at_zero(z);
      // w3 via the two-step construction: seed with HC^{-1}(z), then a(-m).
      GradedVector<LocalRat> w2_loc = hcinv.of(z);
      IntertwinerProblem P{m, 0, false};
      GradedVector<LocalRat> w3 = construct_v(Mloc, P, w2_loc).v;
      RatVector w3_0;
      for (const auto& [mm, cc] : w3.terms) w3_0.add(mm, cc.eval_at_zero());
      // phi(w1) = u_{w1} acting on w2.
      RatVector phi_w1 = lab.plus.vec_mul(w1, w2);
      phi_w1.add_scaled(w3_0, Rat(-1));
      if (!phi_w1.is_zero()) ok = false;
    }
    R.add("psiw3: iterated construction composes through the endomorphism", ok);
  }

  // Lemma a'(i): HC_+(d(j) v) = [d(j), a(-m)] v_lambda for 0 < j < m.
  {
    bool ok = true;
    const auto& g = lab.alg.g();
    for (int m = 2; m <= zmax; ++m) {
      int ga = lab.plus.gen_index(AffKey::loop(g.cartan[0], -m));
      if (ga < 0) continue;
      Mono am;
      am.f.push_back({static_cast<uint16_t>(ga), 1});
      const GradedVector<LocalRat>& v = hcinv.of(lab.plus.intern(am));
      for (int j = 1; j < m; ++j)
        for (int di = 0; di < lab.alg.rank(); ++di) {
          AffKey dj = AffKey::loop(g.cartan[di], j);
          GradedVector<LocalRat> dv = Mloc.act(dj, v);
          GradedVector<LocalRat> hc = hc_project(lab.plus, dv);
          // [d(j), a(-m)] = 0 here (distinct degrees, Cartan directions),
          // so the projection must vanish.
          AffElt br = lab.alg.bracket(dj, AffKey::loop(g.cartan[0], -m));
          GradedVector<LocalRat> expect;
          for (const auto& t : br.terms) {
            int gi = lab.plus.gen_index(t.key);
            if (gi < 0) continue;
            Mono um;
            um.f.push_back({static_cast<uint16_t>(gi), 1});
            expect.add(lab.plus.intern(um), LocalRat(t.coef));
          }
          expect.add_scaled(hc, LocalRat(Rat(-1)));
          if (!expect.is_zero()) ok = false;
        }
    }
    R.add("lema'(i): HC_+(d(j) v) = [d(j), a(-m)] v_lambda for 0 < j < m", ok);
  }

  // Minus-side construction: HC_- round trip and N^--annihilation.
  {
    bool ok = true;
    const auto& g = lab.alg.g();
    for (int m = 1; m <= std::min(zmax, 2); ++m) {
      GradedVector<LocalRat> vac;
      vac.add(minus.one(), RingOps<LocalRat>::one());
      IntertwinerProblem P{m, 0, true};
      GradedVector<LocalRat> v = construct_v(Mloc_minus, P, vac).v;
      // HC_- image is a(-m) itself.
      GradedVector<LocalRat> hc = hc_project(minus, v);
      int ga = minus.gen_index(AffKey::loop(g.cartan[0], -m));
      Mono am;
      am.f.push_back({static_cast<uint16_t>(ga), 1});
      GradedVector<LocalRat> expect;
      expect.add(minus.intern(am), RingOps<LocalRat>::one());
      expect.add_scaled(hc, LocalRat(Rat(-1)));
      if (!expect.is_zero()) ok = false;
      // At x=0 it is singular and lies in the plus-side singular span.
      RatVector v0;
      for (const auto& [mm, cc] : v.terms) v0.add(mm, cc.eval_at_zero());
      RatVector v0_plus = reorder(v0, minus, lab.plus);
      NuVec sd = m * lab.alg.delta_nu();
      std::vector<RatVector> sing = singular_vectors(M, m);
      EchelonSpan span(lab.plus.weight_basis(sd).size());
      for (const auto& sv : sing) span.add(coords(lab.plus, sd, sv));
      if (!span.contains(coords(lab.plus, sd, v0_plus))) ok = false;
    }
    R.add("minus-side construction: HC_- round trip, singular at x=0", ok);
  }

  // Level coefficient: c/m = h_vee via the dynamical and supertrace routes.
  {
    json crows = json::array();
    bool ok = true;
    for (int m = 1; m <= 2; ++m) {
      LevelCoefficient lc = level_coefficient(lab.alg, lab.window, 0, 0, m);
      bool this_ok = lc.consistent && lc.c == lc.c_supertrace &&
                     lc.c == Rat(m) * lab.alg.dual_coxeter() &&
                     lc.vanishing_level == lab.alg.critical_level();
      ok = ok && this_ok;
      crows.push_back({{"m", m},
                       {"c", rat_json(lc.c)},
                       {"c_supertrace", rat_json(lc.c_supertrace)},
                       {"vanishing_level", rat_json(lc.vanishing_level)}});
    }
    R.add("level coefficient: c = m h_vee, supertrace route agrees", ok);
    R.data["level_coefficient"] = crows;
  }
  return R;
}

// ------------------------------------------------------- suite: heisenberg

SuiteResult suite_heisenberg(const RunConfig& cfg) {
  SuiteResult R;
  R.suite = "heisenberg";
  Lab lab(cfg);
  const int deg_max = 5;
  std::vector<int> dirs = all_directions(lab.alg);

  // Nondegeneracy for k in {1, -3/2} up to degree 5.
  for (const Rat& k : {Rat(1), Rat(-3, 2)}) {
    VacuumModule<Rat> V(&lab.alg, dirs, k);
    bool ok = true;
    for (int s = 1; s <= deg_max; ++s)
      if (is_zero(det_rat(V.gram(s)))) ok = false;
    R.add("V^k Gram nondegenerate up to degree 5, k = " + k.get_str(), ok);
  }

  // <a(-m) v_k, a(-m) v_k> = m (a|a) k.
  {
    VacuumModule<Rat> V(&lab.alg, {0}, Rat(1));
    bool ok = true;
    const auto& g = lab.alg.g();
    Rat aa = g.form[g.cartan[0]][g.cartan[0]];
    for (int m = 1; m <= deg_max; ++m) {
      HMono mono{{{m, 0}}};
      if (V.pair(mono, mono) != Rat(m) * aa) ok = false;
    }
    R.add("<a(-m)v, a(-m)v> = m (a|a) k", ok);
  }

  // V^0 layers match the adic filtration of S, and eq (sumFS).
  {
    bool layers_ok = true, sumfs_ok = true;
    TruncationWindow wide{deg_max, deg_max * lab.alg.delta_nu().height()};
    json rows = json::array();
    for (int s = 1; s <= deg_max; ++s) {
      std::vector<int> dims = vacuum_layer_dims(lab.alg, dirs, s);
      std::vector<long> expect;
      long lhs_sum = 0, rhs_sum = 0;
      for (int k = 0;; ++k) {
        long e = ch_S_geq(lab.alg, wide, k).at(s * lab.alg.delta_nu());
        expect.push_back(e);
        long got = k < static_cast<int>(dims.size()) ? dims[k] : 0;
        if (got != e) layers_ok = false;
        if (k >= 1) {
          lhs_sum += got;
          rhs_sum += e;
        }
        if (e == 0) break;
      }
      if (lhs_sum != rhs_sum) sumfs_ok = false;
      rows.push_back({{"degree", s}, {"dims", dims}, {"expected", expect}});
    }
    R.add("V^0 Jantzen layers = partitions with >= k parts (adic filtration)", layers_ok);
    R.add("eq (sumFS): sum_k ch F^k(V^0) = sum_k ch S^{>=k} degreewise", sumfs_ok);
    R.data["vacuum_layers"] = rows;
  }

  // Correspondence with M(lambda) at generic critical lambda, s <= min(3, smax).
  {
    VermaModule<Rat> M = lab.module();
    certify_generic(lab, M, R);
    VermaModule<Poly> Mdef = lab.deformed_module();
    TruncatedCharacter simple = kk_character(lab.alg, lab.window);
    // The correspondence targets V^k for k = (lambda + rho, delta) = 0.
    R.add("correspondence level k = (lambda+rho, delta) = 0",
          is_zero(lab.alg.lam_rho_pair(lab.lambda, lab.alg.delta_fn())));

    json rows = json::array();
    bool ok = true;
    const int scorr = std::min(cfg.smax, 3);
    for (int s = 1; s <= scorr; ++s) {
      NuVec sd = s * lab.alg.delta_nu();
      SBasis sb(lab.plus, s);
      std::vector<RatVector> sing = singular_vectors(M, s);
      // (a) HC_+ bijects singular vectors onto degree-s of V^0 = S.
      EchelonSpan im(sb.monos.size());
      for (const auto& v : sing) im.add(sb.coords(hc_plus(lab.plus, v)));
      bool bij = im.dim() == sing.size() && im.dim() == sb.monos.size();

      // (b) Verma layer dims = convolution of ch L with vacuum layer dims.
      JantzenLayers jl = jantzen_layers(Mdef, sd);
      std::vector<std::vector<int>> vac_dims(s + 1);
      for (int j = 0; j <= s; ++j)
        vac_dims[j] = j == 0 ? std::vector<int>{1, 0} : vacuum_layer_dims(lab.alg, dirs, j);
      bool conv = true;
      std::vector<long> expected;
      for (int k = 0;; ++k) {
        long e = 0;
        for (int j = 0; j <= s; ++j) {
          long vd = k < static_cast<int>(vac_dims[j].size()) ? vac_dims[j][k] : 0;
          e += vd * simple.at((s - j) * lab.alg.delta_nu());
        }
        expected.push_back(e);
        long got = k < static_cast<int>(jl.dims.size()) ? jl.dims[k] : 0;
        if (got != e) conv = false;
        if (e == 0) break;
      }
      ok = ok && bij && conv;
      rows.push_back({{"s", s},
                      {"singular_dim", sing.size()},
                      {"S_dim", sb.monos.size()},
                      {"layers_verma", jl.dims},
                      {"layers_vacuum_convolved", expected},
                      {"match", bij && conv}});
    }
    R.add("correspondence: singular spaces and Jantzen layers match V^0", ok);
    R.data["correspondence"] = rows;
  }
  return R;
}

}  // namespace

std::vector<std::string> known_suites() {
  return {"algebra",     "shapovalov-det", "thm01",      "thm02",
          "sum-formula", "construct",      "heisenberg", "characters"};
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "algebra") return suite_algebra(cfg);
  if (name == "shapovalov-det") return suite_shapovalov(cfg);
  if (name == "thm01") return suite_thm01(cfg);
  if (name == "thm02") return suite_thm02(cfg);
  if (name == "sum-formula") return suite_sum_formula(cfg);
  if (name == "construct") return suite_construct(cfg);
  if (name == "heisenberg") return suite_heisenberg(cfg);
  if (name == "characters") return suite_characters(cfg);
  throw std::runtime_error("unknown suite: " + name);
}

json run_all(const RunConfig& cfg, std::vector<SuiteResult>* results) {
  std::vector<std::string> names = cfg.suites;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = known_suites();

  std::vector<SuiteResult> res(names.size());
  const int threads = std::max(1, cfg.threads);
  std::size_t next = 0;
  while (next < names.size()) {
    std::vector<std::future<SuiteResult>> batch;
    for (int t = 0; t < threads && next + t < names.size(); ++t) {
      const std::string& nm = names[next + t];
      batch.push_back(std::async(std::launch::async, [nm, &cfg] { return run_suite(nm, cfg); }));
    }
    for (std::size_t t = 0; t < batch.size(); ++t) res[next + t] = batch[t].get();
    next += batch.size();
  }

  json out;
  out["config"] = {{"algebra", cfg.algebra},
                   {"smax", cfg.smax},
                   {"height_max", cfg.height_max},
                   {"nu_max_delta", cfg.nu_max_delta},
                   {"nu_max_height", cfg.nu_max_height}};
  bool all_pass = true;
  json suites = json::array();
  for (const auto& r : res) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    suites.push_back({{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}, {"data", r.data}});
    all_pass = all_pass && r.pass;
  }
  out["suites"] = suites;
  out["pass"] = all_pass;
  if (results) *results = std::move(res);
  return out;
}

}  // namespace vermacrit
