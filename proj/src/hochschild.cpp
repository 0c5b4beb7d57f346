#include "ainf/hochschild.hpp"

#include "ainf/signs.hpp"
#include "internal.hpp"

namespace ainf {

namespace {

std::vector<int> tail_degrees(const GradedModule& A, const Word& w) {
    std::vector<int> d(w.size() - 1);
    for (std::size_t q = 1; q < w.size(); ++q) d[q - 1] = A.degree(w[q]);
    return d;
}

// out += coeff * op(in) (x) rest, the op output landing in front.
void emit_front(const MultilinearOp& op, const Word& in, const Word& rest_src, int from, int to, const Scalar& coeff,
                WordComb& out, const Ring& ring) {
    const Vec* v = op.lookup(in);
    if (!v) return;
    Word w;
    w.reserve(1 + to - from);
    w.push_back(0);
    w.insert(w.end(), rest_src.begin() + from, rest_src.begin() + to);
    for (const auto& [o, c] : *v) {
        w[0] = o;
        out.add(w, coeff * c, ring);
    }
}

}  // namespace

long hochschild_degree(const AInfinityBimodule& M, const Word& w) {
    long d = -M.module()->degree(w[0]);
    for (std::size_t q = 1; q < w.size(); ++q) d -= M.A().module()->degree(w[q]) - 1;
    return d;
}

std::string format_chain_word(const AInfinityBimodule& M, const Word& w) {
    std::string s = M.module()->name(w[0]);
    for (std::size_t q = 1; q < w.size(); ++q) s += " (x) " + M.A().module()->name(w[q]);
    return s;
}

WordComb b_component(const AInfinityBimodule& M, const Word& w, int i, int l) {
    const int n = static_cast<int>(w.size()) - 1;
    const auto& ring = M.ring();
    WordComb out;
    if (l < 1 || l > n + 1 || i < 0 || i > n) return out;
    const int mdeg = M.module()->degree(w[0]);
    if (i == 0) {
        if (const auto* op = M.op(0, l - 1)) emit_front(*op, detail::slice(w, 0, l), w, l, n + 1, 1, out, ring);
        return out;
    }
    const auto deg = tail_degrees(*M.A().module(), w);
    if (i <= n - l + 1) {
        const auto* op = M.A().op(l);
        if (!op) return out;
        const Vec* v = op->lookup(detail::slice(w, i, l));
        if (!v) return out;
        const int sign = sign_of(maltese0(mdeg, deg, i - 1));
        Word w2(w.begin(), w.begin() + i);
        w2.push_back(0);
        w2.insert(w2.end(), w.begin() + i + l, w.end());
        for (const auto& [o, c] : *v) {
            w2[i] = o;
            out.add(w2, c * sign, ring);
        }
        return out;
    }
    // overlapping part: mu^M_{n-i+1, i+l-n-2}(a_i..a_n, m, a_1..a_{i+l-n-2}) (x) a_{i+l-n-1} .. a_{i-1}
    const int r = n - i + 1, s = i + l - n - 2;
    const auto* op = M.op(r, s);
    if (!op) return out;
    Word in(w.begin() + i, w.end());
    in.push_back(w[0]);
    in.insert(in.end(), w.begin() + 1, w.begin() + 1 + s);
    emit_front(*op, in, w, s + 1, i, sign_of(star_sign(mdeg, deg, i)), out, ring);
    return out;
}

WordComb differential(const AInfinityBimodule& M, const Word& w) {
    const int n = static_cast<int>(w.size()) - 1;
    WordComb out;
    for (int l = 1; l <= n + 1; ++l)
        for (int i = 0; i <= n; ++i) out.add(b_component(M, w, i, l), 1, M.ring());
    return out;
}

WordComb differential(const AInfinityBimodule& M, const WordComb& x) {
    WordComb out;
    for (const auto& [w, c] : x) out.add(differential(M, w), c, M.ring());
    return out;
}

WordComb diagonal_differential_explicit(const AInfinityAlgebra& A, const Word& w) {
    const int n = static_cast<int>(w.size()) - 1;
    const auto& ring = A.ring();
    const auto& B = *A.module();
    // reduced indices of a_0 .. a_n
    std::vector<long> red(n + 1);
    for (int q = 0; q <= n; ++q) red[q] = B.degree(w[q]) - 1;
    auto sum = [&](int from, int to) {
        long s = 0;
        for (int q = from; q <= to; ++q) s += red[q];
        return s;
    };
    WordComb out;
    for (int l = 1; l <= n + 1; ++l) {
        const auto* mu = A.op(l);
        if (!mu) continue;
        for (int i = 0; i <= n - l + 1; ++i) {
            const Vec* v = mu->lookup(detail::slice(w, i, l));
            if (!v) continue;
            Word w2(w.begin(), w.begin() + i);
            w2.push_back(0);
            w2.insert(w2.end(), w.begin() + i + l, w.end());
            for (const auto& [o, c] : *v) {
                w2[i] = o;
                out.add(w2, c * sign_of(sum(0, i - 1)), ring);
            }
        }
        for (int i = std::max(1, n - l + 2); i <= n; ++i) {
            Word in(w.begin() + i, w.end());
            in.insert(in.end(), w.begin(), w.begin() + (i + l - n - 1));
            const Vec* v = mu->lookup(in);
            if (!v) continue;
            Word w2{0};
            w2.insert(w2.end(), w.begin() + (i + l - n - 1), w.begin() + i);
            const long e = sum(0, i - 1) * sum(i, n);
            for (const auto& [o, c] : *v) {
                w2[0] = o;
                out.add(w2, c * sign_of(e), ring);
            }
        }
    }
    return out;
}

WordComb induced_chain_map(const BimoduleMorphism& f, const Word& w) {
    const int n = static_cast<int>(w.size()) - 1;
    const auto& ring = f.ring();
    const auto& M = *f.source();
    const int mdeg = M.module()->degree(w[0]);
    const auto deg = tail_degrees(*M.A().module(), w);
    const long dterm = static_cast<long>(f.degree()) * hochschild_degree(M, w);
    WordComb out;
    for (int r = 0; r <= n; ++r)
        for (int s = 0; r + s <= n; ++s) {
            const auto* op = f.map(r, s);
            if (!op) continue;
            Word in(w.begin() + (n - r + 1), w.end());
            in.push_back(w[0]);
            in.insert(in.end(), w.begin() + 1, w.begin() + 1 + s);
            const long e = star_sign(mdeg, deg, n - r + 1) + dterm;
            emit_front(*op, in, w, s + 1, n - r + 1, sign_of(e), out, ring);
        }
    return out;
}

WordComb induced_chain_map(const BimoduleMorphism& f, const WordComb& x) {
    WordComb out;
    for (const auto& [w, c] : x) out.add(induced_chain_map(f, w), c, f.ring());
    return out;
}

long InducedChainMap::degree() const {
    long d = 0;
    for (const auto& f : chain_) d -= f->degree();
    return d;
}

WordComb InducedChainMap::apply(const WordComb& x) const {
    WordComb cur = x;
    for (const auto& f : chain_) cur = induced_chain_map(*f, cur);
    return cur;
}

WordComb InducedChainMap::apply(const Word& w) const {
    WordComb x;
    x.add(w, 1, chain_.front()->ring());
    return apply(x);
}

InducedChainMap compose_induced(const InducedChainMap& g, const InducedChainMap& f) {
    if (f.target() != g.source() && !(*f.target()->module() == *g.source()->module()))
        throw Error(ErrorCode::ModuleMismatch, "target of f is not the source of g");
    InducedChainMap h;
    h.chain_ = f.chain_;
    h.chain_.insert(h.chain_.end(), g.chain_.begin(), g.chain_.end());
    return h;
}

int WordBasis::dim(long j) const {
    auto it = blocks.find(j);
    return it == blocks.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<Word>& WordBasis::block(long j) const {
    static const std::vector<Word> empty;
    auto it = blocks.find(j);
    return it == blocks.end() ? empty : it->second;
}

WordBasis enumerate_words(const AInfinityBimodule& M, int min_len, int max_len) {
    WordBasis B;
    for (int n = min_len; n <= max_len; ++n) {
        std::vector<int> sizes(n + 1, M.A().module()->size());
        sizes[0] = M.module()->size();
        WordSpace space(sizes);
        for (std::uint64_t k = 0; k < space.count(); ++k) {
            Word w = space.at(k);
            auto& blk = B.blocks[hochschild_degree(M, w)];
            B.position[w] = static_cast<int>(blk.size());
            blk.push_back(std::move(w));
        }
    }
    return B;
}

ExactMatrix assemble_block(const WordBasis& src, long j, const WordBasis& tgt, long shift, const WordMap& f,
                           const Ring& ring, bool strict, bool parallel) {
    const auto& cols = src.block(j);
    const long jt = j + shift;
    ExactMatrix m(tgt.dim(jt), static_cast<int>(cols.size()));
    const auto n = static_cast<std::int64_t>(cols.size());
    std::atomic<bool> bad{false};
    auto fill = [&](std::int64_t c) {
        WordComb img = f(cols[c]);
        for (const auto& [w, x] : img) {
            auto it = tgt.position.find(w);
            const auto* blk = it == tgt.position.end() ? nullptr : &tgt.block(jt);
            if (!blk || it->second >= static_cast<int>(blk->size()) || (*blk)[it->second] != w) {
                if (strict) bad = true;
                continue;
            }
            m.at(it->second, static_cast<int>(c)) = ring.reduced(x);
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4) num_threads(worker_threads())
        for (std::int64_t c = 0; c < n; ++c) fill(c);
    } else {
        for (std::int64_t c = 0; c < n; ++c) fill(c);
    }
    if (bad) throw Error(ErrorCode::NotFiltrationPreserving, "image leaves the target basis in degree " + std::to_string(jt));
    return m;
}

ChainComplex assemble_complex(const WordBasis& B, const WordMap& d, const Ring& ring, bool strict, bool parallel) {
    ChainComplex C;
    C.ring = ring;
    for (const auto& [j, blk] : B.blocks) C.dims[j] = static_cast<int>(blk.size());
    for (const auto& [j, blk] : B.blocks) C.boundary[j] = assemble_block(B, j, B, -1, d, ring, strict, parallel);
    return C;
}

ChainMap assemble_chain_map(const WordBasis& src, const WordBasis& tgt, long shift, const WordMap& f,
                            const Ring& ring, bool strict, bool parallel) {
    ChainMap F;
    F.shift = shift;
    for (const auto& [j, blk] : src.blocks) F.components[j] = assemble_block(src, j, tgt, shift, f, ring, strict, parallel);
    return F;
}

HochschildChainComplex::HochschildChainComplex(BimodulePtr M, int L)
    : M_(std::move(M)), L_(L), basis_(enumerate_words(*M_, 0, L)) {}

ChainComplex HochschildChainComplex::complex(bool parallel) const {
    const auto& M = *M_;
    return assemble_complex(basis_, [&M](const Word& w) { return differential(M, w); }, M.ring(), true, parallel);
}

ChainMap HochschildChainComplex::chain_map(const InducedChainMap& f, const HochschildChainComplex& target,
                                           bool parallel) const {
    return assemble_chain_map(basis_, target.basis_, f.degree(), [&f](const Word& w) { return f.apply(w); },
                              M_->ring(), true, parallel);
}

}  // namespace ainf
