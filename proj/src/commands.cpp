#include "ainf/commands.hpp"

#include "ainf/cup.hpp"
#include "ainf/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

namespace ainf {

namespace {

struct Ctx {
    const Structure& s;
    const CommandOptions& o;
    Report& rep;
    int L, max_r, max_rs;
    std::string first_failure;

    void verdict(const Verdict& v) {
        rep.lines.push_back((v.holds ? "PASS " : "FAIL ") + v.describe());
        if (!v.holds) {
            rep.exit_code = 1;
            if (first_failure.empty()) first_failure = v.describe();
        }
    }
    void fail(const std::string& what) {
        rep.lines.push_back("FAIL " + what);
        rep.exit_code = 1;
        if (first_failure.empty()) first_failure = what;
    }
    bool in_range(long j) const { return !o.degrees || (j >= o.degrees->first && j <= o.degrees->second); }
};

template <class F>
void timed(Ctx& c, const std::string& label, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    if (c.o.timing) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3fs", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        c.rep.lines.push_back("time " + label + " " + buf);
    }
}

std::string torsion_text(const HomologySummary& h) {
    std::string t;
    for (const auto& x : h.torsion) t += (t.empty() ? "" : " ") + x.get_str();
    return t;
}

std::string join_torsion_row(const ReportRow& r) {
    return r.object + " degree " + std::to_string(r.degree) + ": rank " + std::to_string(r.free_rank) +
           (r.torsion.empty() ? "" : " torsion " + r.torsion) + (r.verdict.empty() ? "" : " [" + r.verdict + "]");
}

std::vector<std::pair<std::string, BimodulePtr>> all_bimodules(const Structure& s) {
    std::vector<std::pair<std::string, BimodulePtr>> v{{"diagonal", s.diagonal}, {"tensor", s.tensor}, {"dual", s.dual}};
    for (const auto& [n, M] : s.bimodules) v.push_back({n, M});
    return v;
}

void homology_rows(Ctx& c, const std::string& object, const ChainComplex& C, long sign, const std::string& verdict = "") {
    std::vector<long> js = C.degrees();
    if (sign < 0) std::reverse(js.begin(), js.end());
    for (long j : js) {
        if (!c.in_range(sign * j)) continue;
        HomologySummary h = homology_at(C, j);
        ReportRow r{object, sign * j, h.free_rank, torsion_text(h), verdict};
        c.rep.lines.push_back(join_torsion_row(r));
        c.rep.rows.push_back(std::move(r));
    }
}

void do_validate(Ctx& c) {
    timed(c, "algebra", [&] {
        for (int r = 1; r <= c.max_r; ++r) c.verdict(check_defining_equation(*c.s.algebra, r));
    });
    for (const auto& [n, M] : all_bimodules(c.s))
        timed(c, "bimodule " + n, [&] {
            for (int r = 0; r <= c.max_rs; ++r)
                for (int t = 0; r + t <= c.max_rs; ++t) {
                    Verdict v = check_bimodule_equation(*M, r, t);
                    v.identity = n + " " + v.identity;
                    c.verdict(v);
                }
        });
    for (const auto& [n, f] : c.s.morphisms)
        timed(c, "morphism " + n, [&] {
            for (int r = 0; r <= c.max_rs; ++r)
                for (int t = 0; r + t <= c.max_rs; ++t) {
                    Verdict v = check_morphism_equation(*f, r, t);
                    v.identity = n + " " + v.identity;
                    c.verdict(v);
                }
        });
}

void do_hh(Ctx& c) {
    auto M = c.s.bimodule(c.o.module);
    timed(c, "hh", [&] {
        HochschildChainComplex H(M, c.L);
        homology_rows(c, "HH_*(A;" + c.o.module + ") L=" + std::to_string(c.L), H.complex(), 1);
    });
}

ChainComplex cochain_complex(const BimodulePtr& M, int L) {
    WordBasis B;
    for (const auto& k : cochain_keys(*M, 0, L)) {
        auto& blk = B.blocks[-cochain_degree(*M, k)];
        B.position[k] = static_cast<int>(blk.size());
        blk.push_back(k);
    }
    return assemble_complex(
        B, [&](const Word& k) { return codifferential(dual_basis_cochain(M, k), L).value.values; }, M->ring(), false);
}

void do_cohomology(Ctx& c) {
    auto M = c.s.bimodule(c.o.module);
    timed(c, "cohomology", [&] {
        homology_rows(c, "HH^*(A;" + c.o.module + ") L=" + std::to_string(c.L), cochain_complex(M, c.L), -1);
    });
}

Verdict leibniz(const HochschildCochain& f, const HochschildCochain& g, int L, const std::string& label, bool& truncated) {
    const Ring& ring = f.coefficients->ring();
    auto fg = cup(f, g, L);
    auto bf = codifferential(f, L), bg = codifferential(g, L);
    auto lhs = codifferential(fg.value, L);
    auto r1 = cup(bf.value, g, L), r2 = cup(f, bg.value, L);
    truncated = fg.truncated || bf.truncated || bg.truncated || lhs.truncated || r1.truncated || r2.truncated;
    WordComb res = lhs.value.values;
    res.add(r1.value.values, -1, ring);
    res.add(r2.value.values, -sign_of(cup_degree(f)), ring);
    Verdict v;
    v.identity = "Leibniz " + label;
    if (!res.is_zero()) {
        v.holds = false;
        v.witness = format_chain_word(*f.coefficients, res.begin()->first);
        v.residual = res.begin()->second.get_str();
    }
    return v;
}

std::vector<std::pair<std::string, std::string>> cup_pairs(const Ctx& c) {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!c.o.names.empty()) {
        if (c.o.names.size() != 2) throw Error(ErrorCode::SyntaxError, "cup takes two cochain names");
        for (const auto& n : c.o.names)
            if (!c.s.cochains.count(n)) throw Error(ErrorCode::UnknownName, "cochain '" + n + "'");
        pairs.push_back({c.o.names[0], c.o.names[1]});
        return pairs;
    }
    for (const auto& [a, f] : c.s.cochains)
        for (const auto& [b, g] : c.s.cochains)
            if (f.coefficients == c.s.diagonal && g.coefficients == c.s.diagonal) pairs.push_back({a, b});
    return pairs;
}

void do_cup(Ctx& c) {
    for (const auto& [a, b] : cup_pairs(c)) {
        const auto& f = c.s.cochains.at(a);
        const auto& g = c.s.cochains.at(b);
        if (f.coefficients != c.s.diagonal || g.coefficients != c.s.diagonal)
            throw Error(ErrorCode::ModuleMismatch, "cup needs cochains with diagonal coefficients");
        auto fg = cup(f, g, c.L);
        c.rep.lines.push_back(a + " u " + b + " = " + format_cochain(fg.value) + (fg.truncated ? " (truncated)" : ""));
        bool truncated = false;
        Verdict v = leibniz(f, g, c.L, a + "," + b, truncated);
        if (truncated && v.holds) c.rep.lines.push_back("SKIP " + v.identity + ": arity exceeds L=" + std::to_string(c.L));
        else if (truncated) c.rep.lines.push_back("SKIP " + v.identity + ": truncated at L=" + std::to_string(c.L));
        else c.verdict(v);
    }
}

Verdict e1_agreement(Ctx& c, const BimodulePtr& M, const std::string& name, bool rows) {
    Verdict v;
    v.identity = "E1 quotient path = direct path on " + name + " for p <= " + std::to_string(c.L);
    for (int p = 0; p <= c.L; ++p) {
        ChainComplex Q = page0(*M, p), D = page0_direct(*M, p);
        for (long j : Q.degrees()) {
            HomologySummary hq = homology_at(Q, j), hd = homology_at(D, j);
            const long q = p - j;
            if (!(hq == hd) && v.holds) {
                v.holds = false;
                v.witness = "p=" + std::to_string(p) + " q=" + std::to_string(q);
                v.residual = hq.describe() + " vs " + hd.describe();
            }
            if (rows && c.in_range(j)) {
                ReportRow r{"E1 " + name + " p=" + std::to_string(p) + " q=" + std::to_string(q), j, hq.free_rank,
                            torsion_text(hq), hq == hd ? "agree" : "disagree"};
                c.rep.lines.push_back(join_torsion_row(r) + " (E0 dim " + std::to_string(Q.dim(j)) + ")");
                c.rep.rows.push_back(std::move(r));
            }
        }
    }
    return v;
}

Verdict comparison(Ctx& c, const std::string& name, const BimoduleMorphism& f) {
    ComparisonVerdict cv = comparison_check(f, c.L);
    c.rep.lines.push_back("comparison " + name + ": " + cv.describe());
    for (const auto& d : cv.details) c.rep.lines.push_back("  " + d);
    Verdict v;
    v.identity = "comparison theorem for " + name;
    if (cv.hypothesis && !cv.conclusion) {
        v.holds = false;
        v.witness = name;
        v.residual = "hypothesis iso but conclusion not iso";
    }
    return v;
}

void do_spectral(Ctx& c) {
    auto M = c.s.bimodule(c.o.module);
    timed(c, "E1", [&] { c.verdict(e1_agreement(c, M, c.o.module, true)); });
    for (const auto& [n, f] : c.s.morphisms) timed(c, "comparison " + n, [&] { c.verdict(comparison(c, n, *f)); });
}

Verdict b_squared(const BimodulePtr& M, const std::string& name, int L) {
    Verdict v;
    v.identity = "b o b = 0 on " + name + " words of length <= " + std::to_string(L);
    WordBasis B = enumerate_words(*M, 0, L);
    for (const auto& [j, blk] : B.blocks)
        for (const auto& w : blk) {
            WordComb r = differential(*M, differential(*M, w));
            if (!r.is_zero()) {
                v.holds = false;
                v.witness = format_chain_word(*M, w);
                v.residual = format_chain_word(*M, r.begin()->first) + " x " + r.begin()->second.get_str();
                return v;
            }
        }
    return v;
}

Verdict induced_commutes(const BimoduleMorphism& f, const std::string& name, int L) {
    Verdict v;
    v.identity = "b f_* = f_* b for " + name + " on length <= " + std::to_string(L);
    WordBasis B = enumerate_words(*f.source(), 0, L);
    for (const auto& [j, blk] : B.blocks)
        for (const auto& w : blk) {
            WordComb r = differential(*f.target(), induced_chain_map(f, w));
            r.add(induced_chain_map(f, differential(*f.source(), w)), -1, f.ring());
            if (!r.is_zero()) {
                v.holds = false;
                v.witness = format_chain_word(*f.source(), w);
                v.residual = format_chain_word(*f.target(), r.begin()->first) + " x " + r.begin()->second.get_str();
                return v;
            }
        }
    return v;
}

Verdict beta_squared(const BimodulePtr& M, const std::string& name, int L) {
    Verdict v;
    v.identity = "beta o beta = 0 on " + name + " dual-basis cochains of arity <= " + std::to_string(L);
    for (const auto& k : cochain_keys(*M, 0, L)) {
        auto r = codifferential(codifferential(dual_basis_cochain(M, k), L).value, L).value;
        if (!r.is_zero()) {
            v.holds = false;
            v.witness = format_chain_word(*M, k);
            v.residual = format_cochain(r);
            return v;
        }
    }
    return v;
}

Verdict duality_square(const BimodulePtr& M, const BimodulePtr& Mdual, const std::string& name, int L) {
    Verdict v;
    v.identity = "phi b* = beta phi on " + name + " dual-basis functionals of length <= " + std::to_string(L);
    WordBasis B = enumerate_words(*M, 0, L);
    for (const auto& [j, blk] : B.blocks)
        for (const auto& w : blk) {
            DualChain F{M, {}};
            F.values.add(w, 1, M->ring());
            auto lhs = duality_iso(transpose_differential(F, L), Mdual).values;
            lhs.add(codifferential(duality_iso(F, Mdual), L).value.values, -1, M->ring());
            if (!lhs.is_zero()) {
                v.holds = false;
                v.witness = format_chain_word(*M, w);
                v.residual = lhs.begin()->second.get_str();
                return v;
            }
        }
    return v;
}

Verdict shuffle_invariance(const BimodulePtr& M, const std::string& name, int L, std::uint64_t seed) {
    Verdict v;
    v.identity = "homology of " + name + " invariant under word reordering (seed " + std::to_string(seed) + ")";
    WordBasis B = enumerate_words(*M, 0, L);
    WordBasis S = B;
    std::mt19937_64 rng(seed);
    S.position.clear();
    for (auto& [j, blk] : S.blocks) {
        std::shuffle(blk.begin(), blk.end(), rng);
        for (int i = 0; i < static_cast<int>(blk.size()); ++i) S.position[blk[i]] = i;
    }
    auto d = [&M](const Word& w) { return differential(*M, w); };
    ChainComplex C1 = assemble_complex(B, d, M->ring(), true), C2 = assemble_complex(S, d, M->ring(), true);
    for (long j : C1.degrees())
        if (!(homology_at(C1, j) == homology_at(C2, j))) {
            v.holds = false;
            v.witness = "degree " + std::to_string(j);
            v.residual = homology_at(C1, j).describe() + " vs " + homology_at(C2, j).describe();
            return v;
        }
    return v;
}

void do_verify(Ctx& c) {
    // a broken structure can make later steps throw (e.g. a non-complex); report it and go on
    auto step = [&c](const std::string& label, auto&& f) {
        timed(c, label, [&] {
            try {
                f();
            } catch (const Error& e) {
                c.fail(label + ": " + e.what());
            }
        });
    };
    step("validate", [&] { do_validate(c); });
    const int small = std::min(c.L, 3);
    for (const auto& [n, M] : all_bimodules(c.s)) step("b o b " + n, [&] { c.verdict(b_squared(M, n, c.L)); });
    for (const auto& [n, f] : c.s.morphisms)
        step("f_* " + n, [&] { c.verdict(induced_commutes(*f, n, small)); });
    step("beta", [&] {
        c.verdict(beta_squared(c.s.diagonal, "diagonal", small));
        c.verdict(duality_square(c.s.diagonal, c.s.dual, "diagonal", small));
        for (const auto& [n, M] : c.s.bimodules) {
            auto Md = std::make_shared<const AInfinityBimodule>(dual_bimodule(*M));
            c.verdict(beta_squared(M, n, small));
            c.verdict(duality_square(M, Md, n, small));
        }
    });
    step("cup", [&] { do_cup(c); });
    step("E1", [&] {
        for (const auto& [n, M] : all_bimodules(c.s)) c.verdict(e1_agreement(c, M, n, false));
    });
    for (const auto& [n, f] : c.s.morphisms) step("comparison " + n, [&] { c.verdict(comparison(c, n, *f)); });
    step("shuffle", [&] { c.verdict(shuffle_invariance(c.s.diagonal, "diagonal", c.L, c.o.seed)); });
    c.rep.lines.push_back(c.first_failure.empty() ? "all identities hold" : "first failure: " + c.first_failure);
}

}  // namespace

std::string Report::text() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

std::string Report::csv() const {
    std::string out = "object,degree,free_rank,torsion,verdict\n";
    for (const auto& r : rows)
        out += "\"" + r.object + "\"," + std::to_string(r.degree) + "," + std::to_string(r.free_rank) + ",\"" +
               r.torsion + "\"," + r.verdict + "\n";
    return out;
}

std::pair<long, long> parse_degree_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw Error(ErrorCode::SyntaxError, "degree range '" + s + "' is not A..B");
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        long lo = std::stol(a, &u1), hi = std::stol(b, &u2);
        if (u1 != a.size() || u2 != b.size() || lo > hi) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw Error(ErrorCode::SyntaxError, "degree range '" + s + "' is not A..B");
    }
}

Report run_command(const std::string& name, const Structure& s, const CommandOptions& o) {
    Report rep;
    Ctx c{s, o, rep, o.length.value_or(s.options.length), o.max_r.value_or(s.options.max_r),
          o.max_rs.value_or(s.options.max_rs), {}};
    rep.lines.push_back("ainfty " + name + " ring " + s.ring.describe() + " L=" + std::to_string(c.L) +
                        " max_r=" + std::to_string(c.max_r) + " max_rs=" + std::to_string(c.max_rs) +
                        " module=" + o.module);
    if (name == "validate") do_validate(c);
    else if (name == "hh") do_hh(c);
    else if (name == "cohomology") do_cohomology(c);
    else if (name == "cup") do_cup(c);
    else if (name == "spectral") do_spectral(c);
    else if (name == "verify") do_verify(c);
    else throw Error(ErrorCode::UnknownName, "command '" + name + "'");
    return rep;
}

}  // namespace ainf
