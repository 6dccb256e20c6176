#include "sep2/word.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sep2 {

bool is_letter(char c) {
    return (c >= 'a' && c <= 'd') || (c >= 'A' && c <= 'D');
}

char inv_letter(char c) { return (char)(c ^ 32); }

int letter_index(char c) {
    return (c >= 'a') ? (c - 'a') : (c - 'A' + 4);
}

void check_word(const Word& w) {
    for (char c : w)
        if (!is_letter(c)) throw WordError(std::string("bad letter '") + c + "' in word");
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv_letter(*it));
    return out;
}

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (char c : w) {
        if (!out.empty() && out.back() == inv_letter(c)) out.pop_back();
        else out.push_back(c);
    }
    return out;
}

Word cyclic_free_reduce(Word w) {
    w = free_reduce(std::move(w));
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == inv_letter(w[hi - 1])) { ++lo; --hi; }
    return w.substr(lo, hi - lo);
}

namespace {

Word rotate(const Word& w, std::size_t i) {
    return w.substr(i) + w.substr(0, i);
}

struct Tables {
    // subword (length 5..7) of a rotation of R or R^-1  ->  shorter complement
    std::unordered_map<Word, Word> dehn;
    // length-4 halves: R^-1-sided -> R-sided complement, and the mirror
    std::unordered_map<Word, Word> ccw, cw;
    // both directions merged: minimal conjugacy representatives are connected
    // by these length-preserving swaps
    std::unordered_map<Word, Word> swap;

    Tables() {
        Word R = kRelator;
        Word Rinv = inverse_word(R);
        for (int which = 0; which < 2; ++which) {
            const Word& base = which == 0 ? R : Rinv;
            for (std::size_t r = 0; r < 8; ++r) {
                Word rho = rotate(base, r);
                for (std::size_t k = 5; k <= 7; ++k)
                    dehn[rho.substr(0, k)] = inverse_word(rho.substr(k));
                Word lhs = rho.substr(0, 4), rhs = inverse_word(rho.substr(4));
                if (which == 1) ccw[lhs] = rhs;  // lhs is R^-1-sided
                else cw[lhs] = rhs;
                swap[lhs] = rhs;
            }
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

// Longest Dehn match starting at position i (linear word).
std::size_t match_at(const Word& w, std::size_t i, Word& repl) {
    const auto& T = tables();
    std::size_t remain = w.size() - i;
    for (std::size_t len = std::min<std::size_t>(7, remain); len >= 5; --len) {
        auto it = T.dehn.find(w.substr(i, len));
        if (it != T.dehn.end()) { repl = it->second; return len; }
    }
    return 0;
}

} // namespace

Word dehn_reduce(Word w) {
    check_word(w);
    w = free_reduce(std::move(w));
    bool changed = true;
    while (changed && w.size() >= 5) {
        changed = false;
        for (std::size_t i = 0; i + 5 <= w.size(); ++i) {
            Word repl;
            std::size_t len = match_at(w, i, repl);
            if (len) {
                w = free_reduce(w.substr(0, i) + repl + w.substr(i + len));
                changed = true;
                break;
            }
        }
    }
    return w;
}

Word cyclic_dehn_reduce(Word w) {
    check_word(w);
    w = cyclic_free_reduce(std::move(w));
    bool changed = true;
    while (changed && w.size() >= 5) {
        changed = false;
        std::size_t n = w.size();
        Word doubled = w + w;
        for (std::size_t i = 0; i < n; ++i) {
            Word repl;
            std::size_t maxlen = std::min<std::size_t>(7, n);
            std::size_t len = 0;
            const auto& T = tables();
            for (std::size_t L = maxlen; L >= 5; --L) {
                auto it = T.dehn.find(doubled.substr(i, L));
                if (it != T.dehn.end()) { repl = it->second; len = L; break; }
            }
            if (len) {
                // splice: remaining arc starts at i+len (cyclically), ends at i
                Word rest = doubled.substr(i + len, n - len);
                w = cyclic_free_reduce(repl + rest);
                changed = true;
                break;
            }
        }
    }
    return w;
}

bool is_trivial_word(const Word& w) { return dehn_reduce(w).empty(); }

namespace {

// flat packed tables for the length 5..7 relator-subword replacements
struct PackedDehn {
    std::vector<std::int32_t> t5, t6, t7;
    PackedDehn() : t5(1 << 15, -1), t6(1 << 18, -1), t7(1 << 21, -1) {
        for (const auto& [lhs, rhs] : tables().dehn) {
            int key = 0;
            for (char c : lhs) key = (key << 3) | letter_index(c);
            int rep = 0;
            for (char c : rhs) rep = (rep << 3) | letter_index(c);
            if (lhs.size() == 5) t5[(std::size_t)key] = rep;
            else if (lhs.size() == 6) t6[(std::size_t)key] = rep;
            else t7[(std::size_t)key] = rep;
        }
    }
    std::int32_t lookup(const char* p, std::size_t L) const {
        int key = 0;
        for (std::size_t i = 0; i < L; ++i) key = (key << 3) | letter_index(p[i]);
        return L == 5 ? t5[(std::size_t)key] : L == 6 ? t6[(std::size_t)key] : t7[(std::size_t)key];
    }
};

const PackedDehn& packed_dehn() {
    static const PackedDehn p;
    return p;
}

} // namespace

void IncrementalReducedWord::push_back_letter(char c) {
    if (!s_.empty() && s_.back() == inv_letter(c)) {
        s_.pop_back();
        return;
    }
    s_.push_back(c);
    fix_end(true);
}

void IncrementalReducedWord::push_front_letter(char c) {
    if (!s_.empty() && s_.front() == inv_letter(c)) {
        s_.erase(s_.begin());
        return;
    }
    s_.insert(s_.begin(), c);
    fix_end(false);
}

// Restore the no->half-relator-subword invariant after touching one end.
// New matches must overlap the modified zone at that end; each replacement
// shortens the word by two, so the loop is amortized constant per push.
void IncrementalReducedWord::fix_end(bool back) {
    const auto& T = packed_dehn();
    std::size_t zone = 1;  // widened after replacements
    std::size_t guard = 0;
    while (true) {
        std::size_t n = s_.size();
        if (n < 5) return;
        if (++guard > 64 + n) throw WordError("IncrementalReducedWord: fix loop stuck");
        bool hit = false;
        for (std::size_t off = 0; off < zone && !hit; ++off) {
            // window end (back) or start (front) at distance off from the end
            for (std::size_t L = 7; L >= 5 && !hit; --L) {
                if (n < L + off) continue;
                std::size_t start = back ? n - L - off : off;
                std::int32_t rep = T.lookup(s_.data() + start, L);
                if (rep < 0) continue;
                char buf[3];
                std::size_t rl = 8 - L;
                for (std::size_t k = 0; k < rl; ++k)
                    buf[rl - 1 - k] = "abcdABCD"[(rep >> (3 * k)) & 7];
                s_.replace(start, L, buf, rl);
                // free-cancel at both seams of the replaced region
                std::size_t p = start;
                while (p > 0 && p < s_.size() && s_[p - 1] == inv_letter(s_[p])) {
                    s_.erase(p - 1, 2);
                    --p;
                }
                std::size_t q = start + rl;
                if (q > s_.size()) q = s_.size();
                while (q > 0 && q < s_.size() && s_[q - 1] == inv_letter(s_[q])) {
                    s_.erase(q - 1, 2);
                    --q;
                }
                // widen the zone to cover everything the splice touched
                std::size_t reach = back ? (s_.size() - std::min(p, s_.size())) + 8 : q + 8;
                zone = std::max(zone, std::min(reach, s_.size()));
                hit = true;
            }
        }
        if (!hit) return;
    }
}

bool words_equal(const Word& x, const Word& y) {
    return is_trivial_word(x + inverse_word(y));
}

namespace {

// 12-bit packed 4-gram tables for the half-relator swap rules
struct PackedRules {
    std::array<std::int16_t, 4096> ccw;  // packed replacement or -1
    std::array<std::int16_t, 4096> cw;

    static int pack(const char* p) {
        return (letter_index(p[0]) << 9) | (letter_index(p[1]) << 6) |
               (letter_index(p[2]) << 3) | letter_index(p[3]);
    }
    static void unpack(int v, char* out) {
        static const char* alph = "abcdABCD";
        out[0] = alph[(v >> 9) & 7];
        out[1] = alph[(v >> 6) & 7];
        out[2] = alph[(v >> 3) & 7];
        out[3] = alph[v & 7];
    }

    PackedRules() {
        ccw.fill(-1);
        cw.fill(-1);
        for (const auto& [lhs, rhs] : tables().ccw) ccw[pack(lhs.data())] = (std::int16_t)pack(rhs.data());
        for (const auto& [lhs, rhs] : tables().cw) cw[pack(lhs.data())] = (std::int16_t)pack(rhs.data());
    }
};

const PackedRules& packed_rules() {
    static const PackedRules p;
    return p;
}

Word one_sided_normalize(Word w, bool ccw_side) {
    if (w.size() < 4) return w;
    const auto& table = ccw_side ? packed_rules().ccw : packed_rules().cw;
    std::size_t cap = 256 + 16 * w.size() * w.size();
    std::size_t steps = 0;
    std::size_t i = 0;
    while (i + 4 <= w.size()) {
        int key = PackedRules::pack(w.data() + i);
        std::int16_t repl = table[key];
        if (repl < 0) { ++i; continue; }
        PackedRules::unpack(repl, w.data() + i);
        if (++steps > cap) throw WordError("one_sided_normalize: step cap exceeded");
        i = i >= 3 ? i - 3 : 0;
    }
    // swaps on geodesic words never create cancellations
    if (free_reduce(w).size() != w.size())
        throw WordError("one_sided_normalize: swap cancelled on a non-geodesic word");
    return w;
}

} // namespace

Word ccw_normalize(Word w) { return one_sided_normalize(std::move(w), true); }
Word cw_normalize(Word w) { return one_sided_normalize(std::move(w), false); }

bool is_ccw_normal(const Word& w) {
    const auto& table = packed_rules().ccw;
    for (std::size_t i = 0; i + 4 <= w.size(); ++i)
        if (table[PackedRules::pack(w.data() + i)] >= 0) return false;
    return true;
}

namespace {

Word least_rotation(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word r = rotate(w, i);
        if (r < best) best = r;
    }
    return best;
}

} // namespace

CyclicWord::CyclicWord(const Word& raw) {
    check_word(raw);
    Word w = cyclic_dehn_reduce(raw);
    if (w.empty()) throw EmptyWord();
    w_ = least_rotation(w);
}

CyclicWord CyclicWord::from_cyclic_reduced(Word w) {
    CyclicWord c;
    c.w_ = least_rotation(w);
    return c;
}

char CyclicWord::at(std::int64_t i) const {
    std::int64_t n = (std::int64_t)w_.size();
    std::int64_t m = ((i % n) + n) % n;
    return w_[(std::size_t)m];
}

CyclicWord CyclicWord::inverse() const {
    return CyclicWord::from_cyclic_reduced(inverse_word(w_));
}

Word CyclicWord::rotation(std::size_t i) const { return rotate(w_, i % w_.size()); }

std::array<int, 4> homology_of_word(const Word& w) {
    std::array<int, 4> h{0, 0, 0, 0};
    for (char c : w) {
        int i = letter_index(c);
        if (i < 4) h[i] += 1;
        else h[i - 4] -= 1;
    }
    return h;
}

std::array<int, 4> homology_class(const CyclicWord& w) { return homology_of_word(w.letters()); }

int alg_intersection(const std::array<int, 4>& x, const std::array<int, 4>& y) {
    return x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
}

std::vector<Word> conjugacy_orbit(const CyclicWord& w, std::size_t cap) {
    const auto& T = tables();
    std::set<Word> seen;          // canonical rotations
    std::vector<Word> frontier;
    Word start = w.letters();
    seen.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        Word cur = frontier.back();
        frontier.pop_back();
        std::size_t n = cur.size();
        if (n < 4) continue;
        Word doubled = cur + cur;
        for (std::size_t i = 0; i < n; ++i) {
            auto it = T.swap.find(doubled.substr(i, 4));
            if (it == T.swap.end()) continue;
            Word rest = doubled.substr(i + 4, n - 4);
            Word next = cyclic_free_reduce(it->second + rest);
            if (next.size() != n)
                throw WordError("conjugacy_orbit: swap shortened a supposedly minimal word");
            Word key = least_rotation(next);
            if (seen.insert(key).second) {
                if (seen.size() > cap) throw WordError("conjugacy_orbit: cap exceeded");
                frontier.push_back(key);
            }
        }
    }
    return std::vector<Word>(seen.begin(), seen.end());
}

Word conjugacy_key(const CyclicWord& w) {
    auto orbit = conjugacy_orbit(w);
    return orbit.front();  // sorted set, least first
}

Word conjugacy_key_unoriented(const CyclicWord& w) {
    Word k1 = conjugacy_key(w);
    Word k2 = conjugacy_key(w.inverse());
    return std::min(k1, k2);
}

bool is_conjugate(const CyclicWord& u, const CyclicWord& v) {
    if (u.size() != v.size()) return false;
    if (homology_class(u) != homology_class(v)) return false;
    return conjugacy_key(u) == conjugacy_key(v);
}

bool conjugate_or_inverse(const CyclicWord& u, const CyclicWord& v) {
    if (u.size() != v.size()) return false;
    auto hu = homology_class(u), hv = homology_class(v);
    std::array<int, 4> hvn{-hv[0], -hv[1], -hv[2], -hv[3]};
    if (hu != hv && hu != hvn) return false;
    return conjugacy_key_unoriented(u) == conjugacy_key_unoriented(v);
}

namespace {

bool literally_periodic(const Word& w) {
    std::size_t n = w.size();
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i - p]);
        if (ok) return true;
    }
    return false;
}

} // namespace

bool is_primitive(const CyclicWord& w) {
    if (w.size() == 0) return false;
    for (const Word& rep : conjugacy_orbit(w))
        if (literally_periodic(rep)) return false;
    return true;
}

std::vector<Word> geodesic_representatives(const Word& w, std::size_t cap) {
    const auto& T = tables();
    Word start = dehn_reduce(w);
    std::set<Word> seen{start};
    std::vector<Word> frontier{start};
    while (!frontier.empty()) {
        Word cur = frontier.back();
        frontier.pop_back();
        for (std::size_t i = 0; i + 4 <= cur.size(); ++i) {
            auto it = T.swap.find(cur.substr(i, 4));
            if (it == T.swap.end()) continue;
            Word next = cur.substr(0, i) + it->second + cur.substr(i + 4);
            if (free_reduce(next).size() != next.size())
                throw WordError("geodesic_representatives: swap shortened a geodesic");
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw WordError("geodesic_representatives: cap exceeded");
                frontier.push_back(next);
            }
        }
    }
    return std::vector<Word>(seen.begin(), seen.end());
}

Word element_key(const Word& w) {
    return geodesic_representatives(w).front();
}

CyclicWord ccw_cycle(const CyclicWord& w) {
    const auto& rules = tables().ccw;
    Word cur = w.letters();
    std::size_t cap = 64 + 16 * cur.size() * cur.size();
    std::size_t steps = 0;
    std::set<Word> seen;
    bool changed = true;
    while (changed && cur.size() >= 4) {
        changed = false;
        std::size_t n = cur.size();
        Word doubled = cur + cur;
        for (std::size_t i = 0; i < n; ++i) {
            auto it = rules.find(doubled.substr(i, 4));
            if (it == rules.end()) continue;
            Word rest = doubled.substr(i + 4, n - 4);
            Word next = cyclic_free_reduce(it->second + rest);
            if (next.size() != n)
                throw WordError("ccw_cycle: swap shortened a minimal cyclic word");
            cur = least_rotation(next);
            changed = true;
            break;
        }
        if (changed) {
            if (!seen.insert(cur).second)
                throw WordError("ccw_cycle: rewrite cycled");
            if (++steps > cap) throw WordError("ccw_cycle: step cap exceeded");
        }
    }
    return CyclicWord::from_cyclic_reduced(cur);
}

} // namespace sep2
