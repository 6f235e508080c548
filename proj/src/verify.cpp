#include "qshelf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qshelf/axq.hpp"
#include "qshelf/errors.hpp"
#include "qshelf/matrices.hpp"
#include "qshelf/partitions.hpp"
#include "qshelf/shelves.hpp"
#include "qshelf/tri_series.hpp"

namespace qshelf {

const char* status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "PASS";
    case Status::fail:
        return "FAIL";
    case Status::skipped:
        return "SKIPPED";
    }
    return "?";
}

namespace {

int to_int(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for " + what + ": '" + s + "'");
    }
}

std::string sr(const Range& r)
{
    return to_string(r);
}

std::string tag(const char* name, int v)
{
    return std::string(name) + std::to_string(v);
}

} // namespace

Fault parse_fault(const std::string& text)
{
    auto c1 = text.find(':');
    auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw ConfigError("fault must be CHECK:lhs|rhs:EXP, got '" + text + "'");
    Fault f;
    f.check = text.substr(0, c1);
    std::string side = text.substr(c1 + 1, c2 - c1 - 1);
    if (side != "lhs" && side != "rhs")
        throw ConfigError("fault side must be lhs or rhs, got '" + side + "'");
    f.rhs = side == "rhs";
    f.exponent = to_int(text.substr(c2 + 1), "fault exponent");
    return f;
}

Range parse_range(const std::string& s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = to_int(s, "range");
        return {v, v};
    }
    Range r{to_int(s.substr(0, dots), "range start"), to_int(s.substr(dots + 2), "range end")};
    if (r.lo > r.hi)
        throw ConfigError("empty range '" + s + "'");
    return r;
}

std::string to_string(const Range& r)
{
    return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

void Config::validate(const std::string& suite) const
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw ConfigError("unknown suite '" + suite + "'");
    if (k.lo < 2 || k.lo > k.hi)
        throw ConfigError("k range must satisfy 2 <= A <= B, got " + sr(k));
    if (shelves.lo < 0 || shelves.lo > shelves.hi)
        throw ConfigError("shelf range must be nonnegative, got " + sr(shelves));
    if (start_shelf.lo < 0 || start_shelf.lo > start_shelf.hi)
        throw ConfigError("start shelf range must be nonnegative, got " + sr(start_shelf));
    if (depth < 1)
        throw ConfigError("depth must be at least 1");
    if (degree < 2 || nmax < 1 || nmax_over < 1 || axq_degree < 2)
        throw ConfigError("degree, nmax, nmax-over and axq-degree must be positive");
    if (suite == "shelves" || suite == "all") {
        int need = required_degree(k.hi, shelves.hi, 1);
        if (degree < need)
            throw ConfigError("degree " + std::to_string(degree) + " too small for shelf " + std::to_string(shelves.hi)
                              + " at k=" + std::to_string(k.hi) + "; minimum is " + std::to_string(need));
    }
}

bool Report::ok() const
{
    return count(Status::fail) == 0;
}

int Report::count(Status s) const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

int worker_count()
{
    if (const char* env = std::getenv("QSHELF_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// One check's view of the world: every comparison goes through here so
// that faults land uniformly and the first mismatch is kept.
class Probe {
public:
    Probe(const Config& cfg, const std::string& id) : cfg_(cfg)
    {
        for (const auto& f : cfg.faults)
            if (f.check == id)
                faults_.push_back(f);
    }

    void same(const std::string& label, Series lhs, Series rhs)
    {
        for (const auto& f : faults_) {
            Series& s = f.rhs ? rhs : lhs;
            if (f.exponent >= s.low() && f.exponent < s.prec()) {
                s.set_coeff(f.exponent, -s.coeff(f.exponent) - 1);
                landed_ = true;
            }
        }
        record(label, compare(lhs, rhs));
    }

    void same(const std::string& label, TriSeries lhs, TriSeries rhs)
    {
        for (const auto& f : faults_) {
            TriSeries& s = f.rhs ? rhs : lhs;
            if (f.exponent >= 0 && f.exponent < s.q_prec()) {
                s.set(0, 0, f.exponent, -s.coeff(0, 0, f.exponent) - 1);
                landed_ = true;
            }
        }
        record(label, compare(lhs, rhs));
    }

    // faults land in entry (1,1)
    void same(const std::string& label, PolyMatrix lhs, PolyMatrix rhs)
    {
        for (const auto& f : faults_) {
            PolyMatrix& m = f.rhs ? rhs : lhs;
            auto t = m.at(1, 1).terms();
            t[f.exponent] = -m.at(1, 1).coeff(f.exponent) - 1;
            m.at(1, 1) = LaurentPoly::from_terms(t);
            landed_ = true;
        }
        ++compared_;
        if (auto d = first_difference(lhs, rhs)) {
            if (!mismatch_) {
                mismatch_ = d->at;
                mismatch_->where = label + (label.empty() ? "" : " ") + d->at.where;
            }
        }
    }

    // a comparison computed inside the library (division traces)
    void require(const std::string& label, const Comparison& c)
    {
        record(label, c);
    }

    void fail(const std::string& why)
    {
        if (!failure_)
            failure_ = why;
    }

    void skip(const std::string& why)
    {
        skipped_ = why;
    }

    void note(const std::string& s)
    {
        notes_ += (notes_.empty() ? "" : "; ") + s;
    }

    const Config& cfg() const { return cfg_; }
    bool failed() const { return mismatch_ || failure_; }
    const std::optional<Mismatch>& mismatch() const { return mismatch_; }

    void finish(CheckRecord& rec) const
    {
        rec.through = through_;
        if (mismatch_) {
            rec.status = Status::fail;
            rec.mismatch = mismatch_;
            const auto& m = *mismatch_;
            rec.detail = "first mismatch at q^" + std::to_string(m.exponent) + (m.where.empty() ? "" : " [" + m.where + "]")
                         + ": lhs " + m.lhs.to_string() + ", rhs " + m.rhs.to_string();
            if (!notes_.empty())
                rec.detail += "; " + notes_;
        } else if (failure_) {
            rec.status = Status::fail;
            rec.detail = *failure_;
        } else if (!faults_.empty() && !landed_) {
            rec.status = Status::fail;
            rec.detail = "injected fault landed in no compared window";
        } else if (skipped_) {
            rec.status = Status::skipped;
            rec.detail = *skipped_;
        } else {
            rec.status = Status::pass;
            rec.detail = std::to_string(compared_) + " comparison" + (compared_ == 1 ? "" : "s")
                         + (through_ >= 0 ? ", through q^" + std::to_string(through_) : "");
            if (!notes_.empty())
                rec.detail += "; " + notes_;
        }
    }

private:
    void record(const std::string& label, const Comparison& c)
    {
        ++compared_;
        if (through_ < 0 || c.through < through_)
            through_ = c.through;
        if (!c.equal && !mismatch_) {
            mismatch_ = c.mismatch;
            if (mismatch_) {
                std::string w = label;
                if (!mismatch_->where.empty())
                    w += (w.empty() ? "" : " ") + mismatch_->where;
                mismatch_->where = w;
            } else {
                failure_ = label + ": " + c.describe();
            }
        }
    }

    const Config& cfg_;
    std::vector<Fault> faults_;
    bool landed_ = false;
    int compared_ = 0;
    int through_ = -1;
    std::optional<Mismatch> mismatch_;
    std::optional<std::string> failure_;
    std::optional<std::string> skipped_;
    std::string notes_;
};

struct Task {
    std::string id;
    std::string anchor;
    std::function<void(Probe&)> body;
};

using Tasks = std::vector<Task>;

std::string lab(int i)
{
    return "i=" + std::to_string(i);
}

Series clamp_nonnegative(Series s)
{
    for (int e = s.low(); e < s.prec(); ++e)
        if (s.coeff(e).sign() < 0)
            s.set_coeff(e, 0);
    return s;
}

PolyMatrix clamp_nonnegative(PolyMatrix m)
{
    for (int r = 1; r <= m.k(); ++r)
        for (int c = 1; c <= m.k(); ++c) {
            auto t = m.at(r, c).terms();
            std::erase_if(t, [](const auto& kv) { return kv.second.sign() < 0; });
            m.at(r, c) = LaurentPoly::from_terms(t);
        }
    return m;
}

PolyMatrix drop_negative_exponents(PolyMatrix m)
{
    for (int r = 1; r <= m.k(); ++r)
        for (int c = 1; c <= m.k(); ++c) {
            auto t = m.at(r, c).terms();
            std::erase_if(t, [](const auto& kv) { return kv.first < 0; });
            m.at(r, c) = LaurentPoly::from_terms(t);
        }
    return m;
}

std::vector<Series> shelf_vector(int k, int j, int N)
{
    std::vector<Series> v;
    for (int i = 1; i <= k; ++i)
        v.push_back(closed_form_G(k, j, i, N));
    return v;
}

void same_vectors(Probe& p, const std::string& what, const std::vector<Series>& a, const std::vector<Series>& b)
{
    for (std::size_t r = 0; r < a.size(); ++r)
        p.same(what + " row " + std::to_string(r + 1), a[r], b[r]);
}

void maybe_witness(Probe& p, const ConditionSet& cond)
{
    if (!p.cfg().witness || !p.mismatch())
        return;
    auto w = witnesses(cond, p.mismatch()->exponent);
    std::string s = "accepted at n=" + std::to_string(p.mismatch()->exponent) + ":";
    for (std::size_t t = 0; t < w.size() && t < 6; ++t)
        s += " " + w[t].to_string();
    if (w.size() > 6)
        s += " ...";
    p.note(s);
}

// ---- identities ----

void add_identities(Tasks& ts, const Config& cfg)
{
    const int N = cfg.degree;
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k)
        for (int i = 1; i <= k; ++i) {
            std::string sfx = "." + tag("k", k) + "." + tag("i", i);
            ts.push_back({"identities.jtp" + sfx, "Jacobi triple product", [=](Probe& p) {
                              auto [sum, prod] = jacobi_triple_product_sides(2 * i - 2, 2 * k - 1, N);
                              p.same("sum vs product", std::move(sum), std::move(prod));
                          }});
            ts.push_back({"identities.shelf0" + sfx, "shelf-0 sum form and closed form", [=](Probe& p) {
                              Series prod = product_side(k, i, N);
                              p.same("product vs sum form", prod, shelf0_sum_form(k, i, N));
                              p.same("product vs closed form j=0", prod, closed_form_G(k, 0, i, N));
                          }});
            if (i >= 2) {
                ts.push_back({"identities.bgg" + sfx, "Bressoud-Gollnitz-Gordon identity", [=](Probe& p) {
                                  const int n = p.cfg().nmax;
                                  auto cond = bgg_conditions(k, i);
                                  p.same("product vs partition count", product_side(k, i, n + 1), gen_fn(cond, n));
                                  maybe_witness(p, cond);
                              }});
                ts.push_back({"identities.product-parts" + sfx, "product side as restricted parts", [=](Probe& p) {
                                  const int n = p.cfg().nmax;
                                  auto cond = product_side_conditions(k, i);
                                  p.same("product vs part-restricted count", product_side(k, i, n + 1), gen_fn(cond, n));
                                  maybe_witness(p, cond);
                              }});
                ts.push_back({"identities.ghost0" + sfx, "shelf-0 ghost closed form and interpolation", [=](Probe& p) {
                                  Series g = ghost0_closed(k, i, N);
                                  p.same("ghost0 vs closed ghost j=0", g, closed_form_ghost(k, 0, i, N));
                                  auto interp = ghosts_from_officials(k, 0, shelf_vector(k, 0, N));
                                  p.same("ghost0 vs interpolation", g, interp.at(static_cast<std::size_t>(i - 2)));
                              }});
            }
        }
}

// ---- shelves ----

void add_shelves(Tasks& ts, const Config& cfg)
{
    const int N = cfg.degree;
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k)
        for (int j = cfg.shelves.lo; j <= cfg.shelves.hi; ++j) {
            std::string sfx = "." + tag("k", k) + "." + tag("j", j);
            ts.push_back({"shelves.edge" + sfx, "edge matching", [=](Probe& p) {
                              p.same("G(j,k) vs G(j+1,1)", closed_form_G(k, j, k, N), closed_form_G(k, j + 1, 1, N));
                          }});
            ts.push_back({"shelves.ghost-interpolation" + sfx, "ghost interpolation from officials", [=](Probe& p) {
                              auto g = ghosts_from_officials(k, j, shelf_vector(k, j, N));
                              for (int i = 2; i <= k; ++i)
                                  p.same(lab(i), g[static_cast<std::size_t>(i - 2)], closed_form_ghost(k, j, i, N));
                          }});
            ts.push_back({"shelves.nonnegative" + sfx, "nonnegative coefficients", [=](Probe& p) {
                              for (int i = 1; i <= k; ++i) {
                                  Series s = closed_form_G(k, j, i, N);
                                  p.same("G " + lab(i), s, clamp_nonnegative(s));
                              }
                              for (int i = 2; i <= k; ++i) {
                                  Series s = closed_form_ghost(k, j, i, N);
                                  p.same("ghost " + lab(i), s, clamp_nonnegative(s));
                              }
                          }});
            if (j >= 1)
                ts.push_back({"shelves.recursion" + sfx, "shelf recursion against closed forms", [=](Probe& p) {
                                  ShelfPair pair = shelf_from_closed_forms(k, 0, N);
                                  for (int t = 0; t < j; ++t) {
                                      ShelfStepTrace tr;
                                      pair = next_shelf(pair, &tr); // NotDivisible on any inexact division
                                      std::string step = "step " + std::to_string(t) + "->" + std::to_string(t + 1);
                                      for (std::size_t a = 0; a < tr.alternate_agreement.size(); ++a)
                                          p.require(step + " two numerators at i=" + std::to_string(a + 3),
                                                    tr.alternate_agreement[a]);
                                      p.require(step + " position 2 is the ghost", tr.position2_is_ghost);
                                  }
                                  const int W = pair.effective_prec;
                                  if (W < 1) {
                                      p.skip("no precision left after " + std::to_string(j) + " steps");
                                      return;
                                  }
                                  for (int i = 1; i <= k; ++i)
                                      p.same("G " + lab(i), pair.G(i), closed_form_G(k, j, i, W));
                                  for (int i = 2; i <= k; ++i)
                                      p.same("ghost " + lab(i), pair.ghost(i), closed_form_ghost(k, j, i, W));
                                  p.note("window q^0..q^" + std::to_string(W - 1));
                              }});
        }
}

// ---- empirical ----

void add_empirical(Tasks& ts, const Config& cfg)
{
    const int N = cfg.degree;
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k)
        for (int j = cfg.shelves.lo; j <= cfg.shelves.hi; ++j)
            for (int ghost = 0; ghost <= 1; ++ghost)
                for (int i = ghost ? 2 : 1; i <= k; ++i) {
                    std::string id = std::string("empirical.") + (ghost ? "ghost" : "official") + "." + tag("k", k) + "."
                                     + tag("j", j) + "." + tag("i", i);
                    ts.push_back({id, ghost ? "ghost valuation bound" : "official valuation bound", [=](Probe& p) {
                                      int need = (!ghost && i == k) ? 2 * j + 3 : 2 * j + 1;
                                      if (N <= need) {
                                          p.skip("degree " + std::to_string(N) + " does not reach q^"
                                                 + std::to_string(need));
                                          return;
                                      }
                                      Series s = ghost ? closed_form_ghost(k, j, i, N) : closed_form_G(k, j, i, N);
                                      ValuationReport v = valuation_report(s, k, j, i, ghost);
                                      p.same("series - 1 below q^" + std::to_string(need), s.truncated(need),
                                             Series::one(need));
                                      p.note("val " + (v.valuation ? std::to_string(*v.valuation) : ">=" + std::to_string(N))
                                             + " >= " + std::to_string(need));
                                  }});
                }
}

// ---- matrices ----

int max_matrix_j(const Config& cfg)
{
    return std::max(cfg.shelves.hi, cfg.start_shelf.hi + cfg.depth);
}

void add_matrices(Tasks& ts, const Config& cfg)
{
    const int N = cfg.degree;
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
        for (int j = 1; j <= max_matrix_j(cfg); ++j) {
            std::string sfx = "." + tag("k", k) + "." + tag("j", j);
            ts.push_back({"matrices.AB" + sfx, "A B = I", [=](Probe& p) {
                              p.same("A B", build_A(k, j) * build_B(k, j), PolyMatrix::identity(k));
                          }});
            ts.push_back({"matrices.Aprime-exponents" + sfx, "A' = A C has no negative exponent", [=](Probe& p) {
                              PolyMatrix m = build_A(k, j) * build_C(k, j);
                              p.same("A C", m, drop_negative_exponents(m));
                          }});
        }
        for (int j = std::max(1, cfg.shelves.lo); j <= cfg.shelves.hi; ++j) {
            std::string sfx = "." + tag("k", k) + "." + tag("j", j);
            ts.push_back({"matrices.CG-BG" + sfx, "C G(j) = B G(j-1)", [=](Probe& p) {
                              same_vectors(p, "C G vs B G", mat_vec(build_C(k, j), shelf_vector(k, j, N)),
                                           mat_vec(build_B(k, j), shelf_vector(k, j - 1, N)));
                          }});
            ts.push_back({"matrices.vector-recursion" + sfx, "G(j-1) = A' G(j)", [=](Probe& p) {
                              same_vectors(p, "G(j-1) vs A' G(j)", shelf_vector(k, j - 1, N),
                                           mat_vec(build_Aprime(k, j), shelf_vector(k, j, N)));
                          }});
        }
        for (int J = cfg.start_shelf.lo; J <= cfg.start_shelf.hi; ++J) {
            ts.push_back({"matrices.h-one-up." + tag("k", k) + "." + tag("J", J), "h one shelf up", [=](Probe& p) {
                              p.same("case formula vs recursion", h_one_up(k, J), h_by_recursion(k, J, J + 1));
                          }});
            for (int j = J + 1; j <= J + cfg.depth; ++j) {
                std::string sfx = "." + tag("k", k) + "." + tag("J", J) + "." + tag("j", j);
                ts.push_back({"matrices.h-routes" + sfx, "h as product and by recursion", [=](Probe& p) {
                                  PolyMatrix h = h_by_product(k, J, j);
                                  p.same("product vs recursion", h, h_by_recursion(k, J, j));
                                  p.same("nonnegative", h, clamp_nonnegative(h));
                              }});
                ts.push_back({"matrices.h-G" + sfx, "G(J) = h G(j)", [=](Probe& p) {
                                  same_vectors(p, "G(J) vs h G(j)", shelf_vector(k, J, N),
                                               mat_vec(h_by_recursion(k, J, j), shelf_vector(k, j, N)));
                              }});
            }
        }
    }
}

// ---- combinatorics ----

void add_combinatorics(Tasks& ts, const Config& cfg)
{
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
        for (int J = cfg.start_shelf.lo; J <= cfg.start_shelf.hi; ++J) {
            for (int j = J + 1; j <= J + cfg.depth; ++j) {
                std::string sfx = "." + tag("k", k) + "." + tag("J", J) + "." + tag("j", j);
                ts.push_back({"combinatorics.h" + sfx, "h entries count partitions", [=](Probe& p) {
                                  const int n = p.cfg().nmax;
                                  PolyMatrix h = h_by_recursion(k, J, j);
                                  for (int i = 1; i <= k && !p.failed(); ++i)
                                      for (int l = 1; l <= k && !p.failed(); ++l) {
                                          p.same("h(" + std::to_string(i) + "," + std::to_string(l) + ")",
                                                 h_oracle(k, i, l, j, J, n), Series::from_poly(h.at(i, l), n + 1));
                                          maybe_witness(p, h_conditions(k, i, l, j, J));
                                      }
                              }});
                ts.push_back({"combinatorics.h12" + sfx, "h(i,1) + h(i,2) counts partitions", [=](Probe& p) {
                                  const int n = p.cfg().nmax;
                                  PolyMatrix h = h_by_recursion(k, J, j);
                                  for (int i = 1; i <= k && !p.failed(); ++i) {
                                      p.same(lab(i), h12_oracle(k, i, j, J, n),
                                             Series::from_poly(h.at(i, 1) + h.at(i, 2), n + 1));
                                      maybe_witness(p, h12_conditions(k, i, j, J));
                                  }
                              }});
            }
            for (int i = 1; i <= k; ++i) {
                std::string sfx = "." + tag("k", k) + "." + tag("J", J) + "." + tag("i", i);
                ts.push_back({"combinatorics.G" + sfx, "official series count partitions", [=](Probe& p) {
                                  const int n = p.cfg().nmax;
                                  auto cond = g_conditions(k, i, J);
                                  p.same("closed form vs count", closed_form_G(k, J, i, n + 1), gen_fn(cond, n));
                                  maybe_witness(p, cond);
                              }});
                if (i >= 2 || J == 0)
                    ts.push_back({"combinatorics.ghost" + sfx, "ghost series count partitions", [=](Probe& p) {
                                      const int n = p.cfg().nmax;
                                      auto cond = ghost_conditions(k, i, J);
                                      Series lhs = i >= 2 ? closed_form_ghost(k, J, i, n + 1)
                                                          : ghost_position_one(k, J, n + 1);
                                      p.same("series vs count", lhs, gen_fn(cond, n));
                                      maybe_witness(p, cond);
                                  }});
                ts.push_back({"combinatorics.h12-limit" + sfx, "h(i,1) + h(i,2) tends to G", [=](Probe& p) {
                                  const int prec = p.cfg().nmax + 1;
                                  Stabilized st = h12_stabilized(k, i, J, prec);
                                  p.same("stabilized sum vs closed form", st.sum, closed_form_G(k, J, i, prec));
                                  p.note("stable from j=" + std::to_string(st.j_stop));
                              }});
            }
        }
        ts.push_back({"combinatorics.ghost-one." + tag("k", k), "first ghost equals second official", [=](Probe& p) {
                          const int N = p.cfg().degree;
                          Series g2 = closed_form_G(k, 0, 2, N);
                          p.same("ghost 1 vs G 2", ghost_position_one(k, 0, N), g2);
                          const int n = std::min(p.cfg().nmax, N - 1);
                          p.same("ghost 1 count vs G 2", gen_fn(ghost_conditions(k, 1, 0), n), g2.truncated(n + 1));
                      }});
    }
}

// ---- axq ----

TriSeries at_xq(const TriSeries& t)
{
    return substitute_x(t, 1);
}

TriSeries times_xq_power(TriSeries t, int r)
{
    return t.shift(0, r, r);
}

TriSeries times_one_plus_xq(TriSeries t)
{
    return t.mul_binomial(1, 0, 1, 1);
}

void add_axq(Tasks& ts, const Config& cfg)
{
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
        std::string kk = "." + tag("k", k);
        ts.push_back({"axq.H-zero" + kk, "H(k,0) vanishes", [=](Probe& p) {
                          const int Q = p.cfg().axq_degree;
                          p.same("H(k,0)", H_tilde(k, 0, Q, Q), TriSeries(Q, Q));
                      }});
        ts.push_back({"axq.HH-zero" + kk, "ghost H(k,0) vanishes", [=](Probe& p) {
                          const int Q = p.cfg().axq_degree;
                          p.same("HH(k,0)", H_ghost_scaled(k, 0, 0, 0, Q, Q), TriSeries(Q, Q));
                      }});
        for (int i = 1; i <= k; ++i) {
            std::string sfx = kk + "." + tag("i", i);
            ts.push_back({"axq.H-reflection" + sfx, "H(k,-i) = -x^-i H(k,i)", [=](Probe& p) {
                              const int Q = p.cfg().axq_degree;
                              p.same("x^i H(k,-i) vs -H(k,i)", H_tilde_scaled(k, -i, 0, i, Q, Q), -H_tilde(k, i, Q, Q));
                          }});
            ts.push_back({"axq.HH-reflection" + sfx, "HH(k,-i) = -x^-i HH(k,i)", [=](Probe& p) {
                              const int Q = p.cfg().axq_degree;
                              p.same("x^i HH(k,-i) vs -HH(k,i)", H_ghost_scaled(k, -i, 0, i, Q, Q),
                                     -H_ghost_scaled(k, i, 0, 0, Q, Q));
                          }});
        }
        for (int i = 0; i <= k + 1; ++i)
            ts.push_back({"axq.H-difference" + kk + "." + tag("i", i), "H(k,i) - H(k,i-2) = x^(i-2) (1+x) J(k,k-i+1)",
                          [=](Probe& p) {
                              const int Q = p.cfg().axq_degree;
                              // negative powers of x moved to the left
                              const int m = std::max(0, 2 - i);
                              TriSeries lhs = H_tilde_scaled(k, i, 0, m, Q, Q) - H_tilde_scaled(k, i - 2, 0, m, Q, Q);
                              TriSeries rhs = J_tilde(k, k - i + 1, Q).truncated(Q, Q);
                              rhs.mul_binomial(1, 0, 1, 0);
                              rhs.shift(0, std::max(0, i - 2), 0);
                              p.same("difference", lhs, rhs);
                          }});
        for (int i = 1; i <= k + 1; ++i)
            ts.push_back({"axq.J-routes" + kk + "." + tag("i", i), "J as H combination and single sum", [=](Probe& p) {
                              const int Q = p.cfg().axq_degree;
                              p.same("combination vs single sum", J_tilde_combination(k, i, Q), J_tilde_single_sum(k, i, Q));
                          }});
        for (int i = 1; i <= k; ++i)
            ts.push_back({"axq.JJ-routes" + kk + "." + tag("i", i), "ghost J by three routes", [=](Probe& p) {
                              const int Q = p.cfg().axq_degree;
                              TriSeries c = J_ghost_combination(k, i, Q);
                              p.same("combination vs interpolation", c, J_ghost_interpolation(k, i, Q));
                              p.same("combination vs single sum", c, J_ghost_single_sum(k, i, Q));
                          }});
        ts.push_back({"axq.J-first" + kk, "J(k,1)(x) = J(k,k)(xq)", [=](Probe& p) {
                          const int Q = p.cfg().axq_degree;
                          p.same("J1 vs Jk(xq)", J_tilde(k, 1, Q), at_xq(J_tilde(k, k, Q)));
                      }});
        ts.push_back({"axq.J-second" + kk, "J(k,2) = (1+xq) J(k,k-1)(xq) + axq J(k,k)(xq)", [=](Probe& p) {
                          const int Q = p.cfg().axq_degree;
                          TriSeries rhs = times_one_plus_xq(at_xq(J_tilde(k, k - 1, Q)));
                          rhs += at_xq(J_tilde(k, k, Q)).shift(1, 1, 1);
                          p.same("J2", J_tilde(k, 2, Q), rhs);
                          // solved for J(k,k-1)(xq)
                          TriSeries solved = J_tilde(k, 2, Q) - J_tilde(k, 1, Q).shift(1, 1, 1);
                          solved.div_binomial(1, 0, 1, 1);
                          p.same("J(k,k-1)(xq) solved", at_xq(J_tilde(k, k - 1, Q)), solved);
                      }});
        for (int i = 3; i <= k + 1; ++i)
            ts.push_back({"axq.J-difference" + kk + "." + tag("i", i),
                          "J(k,i) - J(k,i-2) = (xq)^(i-2) (1+xq) [J(k,k-i+1)(xq) + a J(k,k-i+2)(xq)]", [=](Probe& p) {
                              const int Q = p.cfg().axq_degree;
                              TriSeries inner = at_xq(J_tilde(k, k - i + 1, Q)) + at_xq(J_tilde(k, k - i + 2, Q)).shift(1, 0, 0);
                              TriSeries rhs = times_xq_power(times_one_plus_xq(inner), i - 2);
                              p.same("difference", J_tilde(k, i, Q) - J_tilde(k, i - 2, Q), rhs);
                              // solved for J(k,k-i+1)(xq) by strict division
                              TriSeries solved = divide_exact_by_xq_power(J_tilde(k, i, Q) - J_tilde(k, i - 2, Q), i - 2);
                              solved.div_binomial(1, 0, 1, 1);
                              solved -= at_xq(J_tilde(k, k - i + 2, Q)).shift(1, 0, 0);
                              p.same("J(k,k-i+1)(xq) solved", at_xq(J_tilde(k, k - i + 1, Q)).truncated(solved.q_prec(), solved.x_prec()),
                                     solved);
                          }});
        ts.push_back({"axq.J-beyond" + kk, "J(k,k+1) = J(k,k-1)", [=](Probe& p) {
                          const int Q = p.cfg().axq_degree;
                          p.same("J(k,k+1) vs J(k,k-1)", J_tilde(k, k + 1, Q), J_tilde(k, k - 1, Q));
                      }});
        ts.push_back({"axq.JJ-last" + kk, "JJ(k,k) = J(k,k-1)", [=](Probe& p) {
                          const int Q = p.cfg().axq_degree;
                          p.same("JJ(k,k) vs J(k,k-1)", J_tilde_ghost(k, k, Q), J_tilde(k, k - 1, Q));
                      }});
        ts.push_back({"axq.JJ-first" + kk, "JJ(k,1) = (J(k,2) - axq J(k,1)) / (1+xq) = H(k,2)(xq) / (1+xq)", [=](Probe& p) {
                          const int Q = p.cfg().axq_degree;
                          TriSeries jj = J_tilde_ghost(k, 1, Q);
                          TriSeries scaled = times_one_plus_xq(jj);
                          p.same("(1+xq) JJ1 vs J2 - axq J1", scaled, J_tilde(k, 2, Q) - J_tilde(k, 1, Q).shift(1, 1, 1));
                          p.same("(1+xq) JJ1 vs H2(xq)", scaled, H_tilde_scaled(k, 2, 1, 0, Q, Q));
                      }});
        ts.push_back({"axq.JJ-divided-first" + kk, "J(k,k-1)(xq) = (J(k,2) - JJ(k,1))/(xq) - a J(k,k)(xq) = JJ(k,1)",
                      [=](Probe& p) {
                          const int Q = p.cfg().axq_degree;
                          TriSeries jj = J_tilde_ghost(k, 1, Q);
                          TriSeries d = divide_exact_by_xq_power(J_tilde(k, 2, Q) - jj, 1);
                          d -= at_xq(J_tilde(k, k, Q)).shift(1, 0, 0);
                          p.same("quotient vs J(k,k-1)(xq)", d, at_xq(J_tilde(k, k - 1, Q)));
                          p.same("quotient vs JJ(k,1)", d, jj);
                      }});
        for (int i = 3; i <= k; ++i)
            ts.push_back({"axq.JJ-divided" + kk + "." + tag("i", i), "J(k,k-i+1)(xq) from two strict divisions", [=](Probe& p) {
                              const int Q = p.cfg().axq_degree;
                              TriSeries tail = at_xq(J_tilde(k, k - i + 2, Q)).shift(1, 0, 0);
                              TriSeries a = divide_exact_by_xq_power(J_tilde(k, i, Q) - J_tilde_ghost(k, i - 1, Q), i - 1);
                              a -= tail;
                              TriSeries b = divide_exact_by_xq_power(J_tilde_ghost(k, i - 1, Q) - J_tilde(k, i - 2, Q), i - 2);
                              b -= tail;
                              p.same("first quotient", a, at_xq(J_tilde(k, k - i + 1, Q)));
                              p.same("second quotient", b, at_xq(J_tilde(k, k - i + 1, Q)));
                          }});
        for (int i = 2; i <= k - 1; ++i)
            ts.push_back({"axq.JJ-interpolation" + kk + "." + tag("i", i), "(1+xq) JJ(k,i) = J(k,i+1) + xq J(k,i-1)",
                          [=](Probe& p) {
                              const int Q = p.cfg().axq_degree;
                              p.same("interpolation", times_one_plus_xq(J_tilde_ghost(k, i, Q)),
                                     J_tilde(k, i + 1, Q) + times_xq_power(J_tilde(k, i - 1, Q), 1));
                          }});
        for (int j = cfg.shelves.lo; j <= cfg.shelves.hi; ++j)
            ts.push_back({"axq.dictionary" + kk + "." + tag("j", j), "specialization a=1/q, x=q^2j, q->q^2", [=](Probe& p) {
                              const int N = p.cfg().axq_degree;
                              for (int i = 1; i <= k; ++i)
                                  p.same("G " + lab(i), specialize_dictionary(J_tilde(k, k - i + 1, N), j, N),
                                         closed_form_G(k, j, i, N));
                              for (int i = j == 0 ? 1 : 2; i <= k; ++i) {
                                  Series rhs = i >= 2 ? closed_form_ghost(k, j, i, N) : closed_form_G(k, 0, 2, N);
                                  p.same("ghost " + lab(i), specialize_dictionary(J_tilde_ghost(k, k - i + 1, N), j, N), rhs);
                              }
                          }});
        for (int i = 1; i <= k; ++i)
            ts.push_back({"axq.overpartitions" + kk + "." + tag("i", i), "J and JJ count overpartitions", [=](Probe& p) {
                              const int n = p.cfg().nmax_over;
                              p.same("J vs official count", J_tilde(k, i, n + 1), overpartition_gen_fn(k, i, n, 1, OverReading::literal));
                              p.same("JJ vs ghost count", J_tilde_ghost(k, i, n + 1),
                                     overpartition_gen_fn(k, i, n, 0, OverReading::literal));
                          }});
    }
}

// digits compare as numbers so k10 follows k9
bool natural_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei])))
                ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej])))
                ++ej;
            long long x = std::stoll(a.substr(i, ei - i)), y = std::stoll(b.substr(j, ej - j));
            if (x != y)
                return x < y;
            i = ei;
            j = ej;
            continue;
        }
        if (a[i] != b[j])
            return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

Tasks build_tasks(const std::string& name, const Config& cfg)
{
    Tasks ts;
    bool all = name == "all";
    if (all || name == "identities")
        add_identities(ts, cfg);
    if (all || name == "shelves")
        add_shelves(ts, cfg);
    if (all || name == "empirical")
        add_empirical(ts, cfg);
    if (all || name == "matrices")
        add_matrices(ts, cfg);
    if (all || name == "combinatorics")
        add_combinatorics(ts, cfg);
    if (all || name == "axq")
        add_axq(ts, cfg);
    std::stable_sort(ts.begin(), ts.end(), [](const Task& a, const Task& b) { return natural_less(a.id, b.id); });
    return ts;
}

CheckRecord run_task(const Task& t, const Config& cfg)
{
    CheckRecord rec;
    rec.id = t.id;
    rec.anchor = t.anchor;
    auto t0 = std::chrono::steady_clock::now();
    Probe p(cfg, t.id);
    try {
        t.body(p);
        p.finish(rec);
    } catch (const std::exception& e) {
        p.finish(rec);
        if (rec.status != Status::fail) {
            rec.status = Status::fail;
            rec.detail = std::string("exception: ") + e.what();
        }
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"identities", "shelves", "empirical", "matrices",
                                                "combinatorics", "axq", "all"};
    return names;
}

std::vector<std::string> list_checks(const std::string& name, const Config& cfg)
{
    cfg.validate(name);
    std::vector<std::string> ids;
    for (const auto& t : build_tasks(name, cfg))
        ids.push_back(t.id);
    return ids;
}

Report run_suite(const std::string& name, const Config& cfg)
{
    cfg.validate(name);
    for (const auto& f : cfg.faults)
        (void)f; // unknown ids simply never match; the meta tests list ids first
    Tasks ts = build_tasks(name, cfg);
    Report rep{name, cfg, std::vector<CheckRecord>(ts.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next++) < ts.size();)
            rep.checks[t] = run_task(ts[t], cfg);
    };
    int n = std::min<int>(worker_count(), static_cast<int>(ts.size()));
    std::vector<std::thread> pool;
    for (int w = 1; w < n; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    return rep;
}

std::string emit_text(const Report& r)
{
    std::ostringstream os;
    const Config& c = r.config;
    os << "suite " << r.suite << "  k=" << to_string(c.k) << " degree=" << c.degree << " shelves=" << to_string(c.shelves)
       << " J=" << to_string(c.start_shelf) << " depth=" << c.depth << " nmax=" << c.nmax << " nmax-over=" << c.nmax_over
       << " axq-degree=" << c.axq_degree << "\n";
    std::size_t w = 0;
    for (const auto& rec : r.checks)
        w = std::max(w, rec.id.size());
    for (const auto& rec : r.checks) {
        std::string st = status_name(rec.status);
        os << st << std::string(8 - st.size(), ' ') << rec.id << std::string(w + 2 - rec.id.size(), ' ') << "["
           << rec.anchor << "]  " << rec.detail << "\n";
    }
    os << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, " << r.count(Status::skipped)
       << " skipped\n";
    return os.str();
}

std::string emit_json(const Report& r)
{
    using nlohmann::ordered_json;
    const Config& c = r.config;
    ordered_json j;
    j["suite"] = r.suite;
    j["parameters"] = {{"k", to_string(c.k)},
                       {"degree", c.degree},
                       {"shelves", to_string(c.shelves)},
                       {"start_shelf", to_string(c.start_shelf)},
                       {"depth", c.depth},
                       {"nmax", c.nmax},
                       {"nmax_over", c.nmax_over},
                       {"axq_degree", c.axq_degree}};
    ordered_json checks = ordered_json::array();
    for (const auto& rec : r.checks) {
        ordered_json e;
        e["id"] = rec.id;
        e["anchor"] = rec.anchor;
        e["status"] = status_name(rec.status);
        e["detail"] = rec.detail;
        if (rec.mismatch)
            e["mismatch"] = {{"exponent", rec.mismatch->exponent},
                             {"lhs", rec.mismatch->lhs.to_string()},
                             {"rhs", rec.mismatch->rhs.to_string()},
                             {"where", rec.mismatch->where}};
        else
            e["mismatch"] = nullptr;
        e["through"] = rec.through;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)}, {"skipped", r.count(Status::skipped)}};
    return j.dump(2) + "\n";
}

Report parse_json(const std::string& text)
{
    auto j = nlohmann::ordered_json::parse(text);
    Report r;
    r.suite = j.at("suite").get<std::string>();
    const auto& p = j.at("parameters");
    r.config.k = parse_range(p.at("k").get<std::string>());
    r.config.degree = p.at("degree").get<int>();
    r.config.shelves = parse_range(p.at("shelves").get<std::string>());
    r.config.start_shelf = parse_range(p.at("start_shelf").get<std::string>());
    r.config.depth = p.at("depth").get<int>();
    r.config.nmax = p.at("nmax").get<int>();
    r.config.nmax_over = p.at("nmax_over").get<int>();
    r.config.axq_degree = p.at("axq_degree").get<int>();
    for (const auto& e : j.at("checks")) {
        CheckRecord rec;
        rec.id = e.at("id").get<std::string>();
        rec.anchor = e.at("anchor").get<std::string>();
        std::string st = e.at("status").get<std::string>();
        rec.status = st == "PASS" ? Status::pass : st == "FAIL" ? Status::fail : st == "SKIPPED" ? Status::skipped
                                                                                                 : throw Error("bad status " + st);
        rec.detail = e.at("detail").get<std::string>();
        if (!e.at("mismatch").is_null()) {
            const auto& m = e.at("mismatch");
            rec.mismatch = Mismatch{m.at("exponent").get<int>(), Integer(m.at("lhs").get<std::string>()),
                                    Integer(m.at("rhs").get<std::string>()), m.at("where").get<std::string>()};
        }
        rec.through = e.at("through").get<int>();
        r.checks.push_back(std::move(rec));
    }
    return r;
}

} // namespace qshelf
