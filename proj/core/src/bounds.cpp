#include "subcode/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "subcode/grassmann.hpp"

namespace subcode {

namespace {

mpz_class pow_z(unsigned q, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

std::string dims_str(const std::vector<unsigned>& dims) {
    std::string s;
    for (unsigned d : dims) {
        if (!s.empty()) s += ",";
        s += std::to_string(d);
    }
    return s;
}

std::string a_label(unsigned q, unsigned v, unsigned d, unsigned k) {
    return "A_" + std::to_string(q) + "(" + std::to_string(v) + "," + std::to_string(d) + ";" + std::to_string(k) +
           ")";
}

void require_q(unsigned q) {
    if (q < 2) throw std::invalid_argument("bounds: q must be >= 2");
}

}  // namespace

bool BoundsDb::Key::operator<(const Key& o) const {
    if (q != o.q) return q < o.q;
    if (v != o.v) return v < o.v;
    if (d != o.d) return d < o.d;
    return dims < o.dims;
}

BoundsDb::Key BoundsDb::canonical_key(unsigned q, unsigned v, unsigned d, const std::set<unsigned>& dims) {
    std::vector<unsigned> direct(dims.begin(), dims.end());
    std::vector<unsigned> mirrored;
    mirrored.reserve(direct.size());
    for (auto it = direct.rbegin(); it != direct.rend(); ++it) {
        if (*it > v) throw std::invalid_argument("BoundsDb: dimension exceeds ambient");
        mirrored.push_back(v - *it);
    }
    return Key{q, v, d, std::min(direct, mirrored)};
}

BoundsDb BoundsDb::seed_table() {
    BoundsDb db;
    auto exact = [&db](unsigned q, unsigned v, unsigned d, std::set<unsigned> dims, long value, const char* who) {
        db.set(q, v, d, dims, mpz_class(value), mpz_class(value), who);
    };
    exact(2, 7, 6, {3}, 17, "partial plane spreads in PG(6,2)");
    exact(2, 6, 4, {3}, 77, "improvement over the one-incidence value 81");
    exact(2, 13, 4, {3}, 1597245, "Johnson bound attained");
    exact(2, 7, 5, {0, 1, 2, 3, 4, 5, 6, 7}, 34, "maximum mixed-dimension code in F_2^7");
    db.set(2, 8, 6, {4}, mpz_class(257), mpz_class(272), "lifted MRD plus one / ILP upper bound");
    db.set(2, 7, 4, {3}, mpz_class(333), mpz_class(381), "online tables");
    db.set(2, 9, 5, {4, 5}, mpz_class(65), mpz_class(66), "open gap");
    db.set(2, 10, 8, {5}, mpz_class(1025), mpz_class(1089), "lifted MRD plus one / Johnson bound");
    return db;
}

void BoundsDb::set(unsigned q, unsigned v, unsigned d, const std::set<unsigned>& dims,
                   std::optional<mpz_class> lower, std::optional<mpz_class> upper, std::string provenance) {
    require_q(q);
    if (dims.empty()) throw std::invalid_argument("BoundsDb: empty dimension set");
    if (lower && upper && *lower > *upper) {
        throw std::invalid_argument("BoundsDb: lower bound exceeds upper bound");
    }
    records_[canonical_key(q, v, d, dims)] = BoundsRecord{std::move(lower), std::move(upper), std::move(provenance)};
}

std::optional<BoundsRecord> BoundsDb::lookup(unsigned q, unsigned v, unsigned d, const std::set<unsigned>& dims) const {
    auto it = records_.find(canonical_key(q, v, d, dims));
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

std::optional<BoundsRecord> BoundsDb::lookup(unsigned q, unsigned v, unsigned d, unsigned k) const {
    return lookup(q, v, d, std::set<unsigned>{k});
}

BoundsDb BoundsDb::load(std::istream& in) {
    BoundsDb db;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string provenance;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            provenance = raw.substr(hash + 1);
            auto b = provenance.find_first_not_of(" \t");
            provenance = b == std::string::npos ? "" : provenance.substr(b);
            raw.erase(hash);
        }
        std::stringstream ss(raw);
        std::string tq, tv, td, tk, tlo, thi;
        if (!(ss >> tq)) continue;  // blank or comment-only line
        if (!(ss >> tv >> td >> tk >> tlo >> thi)) {
            throw std::runtime_error("bounds file line " + std::to_string(lineno) +
                                     ": expected 'q v d K lower upper'");
        }
        std::set<unsigned> dims;
        {
            std::stringstream ks(tk);
            std::string item;
            while (std::getline(ks, item, ',')) dims.insert(static_cast<unsigned>(std::stoul(item)));
        }
        auto parse_bound = [&](const std::string& t) -> std::optional<mpz_class> {
            if (t == "?") return std::nullopt;
            return mpz_class(t);
        };
        try {
            db.set(std::stoul(tq), std::stoul(tv), std::stoul(td), dims, parse_bound(tlo), parse_bound(thi),
                   provenance);
        } catch (const std::exception& e) {
            throw std::runtime_error("bounds file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return db;
}

BoundsDb BoundsDb::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bounds file: " + path);
    return load(in);
}

void BoundsDb::save(std::ostream& out) const {
    for (const auto& [key, rec] : records_) {
        out << key.q << " " << key.v << " " << key.d << " " << dims_str(key.dims) << " "
            << (rec.lower ? rec.lower->get_str() : "?") << " " << (rec.upper ? rec.upper->get_str() : "?");
        if (!rec.provenance.empty()) out << " # " << rec.provenance;
        out << "\n";
    }
}

std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::johnson: return "johnson";
        case BoundMethod::partial_spread: return "partial_spread";
        case BoundMethod::degree: return "degree";
        case BoundMethod::double_count: return "double_count";
        case BoundMethod::one_incidence: return "one_incidence";
        case BoundMethod::pair_threshold: return "pair_threshold";
        case BoundMethod::db_lookup: return "db_lookup";
        case BoundMethod::trivial: return "trivial";
    }
    return "?";
}

mpz_class partial_spread_size(unsigned q, unsigned v, unsigned k) {
    require_q(q);
    if (k < 2 || k > v) throw std::invalid_argument("partial_spread_size: requires 2 <= k <= v");
    if (v % k != 1) throw std::invalid_argument("partial_spread_size: requires v = 1 (mod k)");
    mpz_class num = pow_z(q, v) - q;
    mpz_class den = pow_z(q, k) - 1;
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out - q + 1;
}

namespace {

// Shared resolver behind johnson_bound / resolve_upper / degree_bound.
// Bottoms out at exact spread and partial-spread cases; everything else is a
// valid upper bound, labeled in the derivation.
struct Resolver {
    const BoundsDb& db;
    bool use_inexact_db;

    BoundResult resolve(unsigned q, unsigned v, unsigned d, unsigned k, unsigned depth) const {
        require_q(q);
        if (k > v) throw std::invalid_argument("resolve_upper: k > v");
        if (d % 2 != 0 || d < 2) throw std::invalid_argument("resolve_upper: d must be even and >= 2");
        const std::string pad(2 * depth, ' ');
        BoundResult res;
        unsigned kk = std::min(k, v - k);
        std::string label = a_label(q, v, d, k);
        std::string swap_note;
        if (kk != k) swap_note = " = " + a_label(q, v, d, kk) + " (orthogonal)";

        if (kk == 0) {
            res.value = 1;
            res.method = BoundMethod::trivial;
            res.derivation = pad + label + swap_note + " = 1 [trivial: single subspace]";
            return res;
        }
        if (d > 2 * kk) {
            res.value = 1;
            res.method = BoundMethod::trivial;
            res.derivation = pad + label + swap_note + " = 1 [trivial: d exceeds the diameter 2*min(k,v-k)]";
            return res;
        }

        std::optional<BoundsRecord> rec = db.lookup(q, v, d, kk);
        if (rec && rec->lower && rec->upper && *rec->lower == *rec->upper) {
            res.value = *rec->upper;
            res.method = BoundMethod::db_lookup;
            res.derivation = pad + label + swap_note + " = " + res.value.get_str() + " [db: " + rec->provenance + "]";
            return res;
        }

        if (d == 2) {
            res.value = gaussian_binomial(v, kk, q);
            res.method = BoundMethod::trivial;
            res.derivation = pad + label + swap_note + " = " + res.value.get_str() + " [trivial: all subspaces, d=2]";
        } else if (d == 2 * kk) {
            mpz_class den = pow_z(q, kk) - 1;
            if (v % kk == 0) {
                mpz_class num = pow_z(q, v) - 1;
                mpz_divexact(res.value.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                res.method = BoundMethod::partial_spread;
                res.derivation =
                    pad + label + swap_note + " = " + res.value.get_str() + " [spread: (q^v-1)/(q^k-1), v=0 mod k]";
            } else if (v % kk == 1) {
                res.value = partial_spread_size(q, v, kk);
                res.method = BoundMethod::partial_spread;
                res.derivation = pad + label + swap_note + " = " + res.value.get_str() +
                                 " [partial spread: (q^v-q)/(q^k-1)-q+1, v=1 mod k]";
            } else {
                res.value = (pow_z(q, v) - 1) / den;  // floor
                res.method = BoundMethod::trivial;
                res.derivation = pad + label + swap_note + " <= " + res.value.get_str() +
                                 " [unconditioned: point packing floor((q^v-1)/(q^k-1))]";
            }
        } else {
            BoundResult inner = resolve(q, v - 1, d, kk - 1, depth + 1);
            mpz_class num = (pow_z(q, v) - 1) * inner.value;
            mpz_class den = pow_z(q, kk) - 1;
            res.value = num / den;  // floor
            res.method = BoundMethod::johnson;
            res.derivation = pad + label + swap_note + " <= " + res.value.get_str() +
                             " [johnson: floor((q^v-1)/(q^k-1) * " + a_label(q, v - 1, d, kk - 1) + ")]\n" +
                             inner.derivation;
        }

        if (use_inexact_db && rec && rec->upper && *rec->upper < res.value) {
            res.value = *rec->upper;
            res.method = BoundMethod::db_lookup;
            res.derivation = pad + label + swap_note + " <= " + res.value.get_str() + " [db upper: " +
                             rec->provenance + "]\n" + res.derivation;
        }
        return res;
    }
};

}  // namespace

BoundResult resolve_upper(unsigned q, unsigned v, unsigned d, unsigned k, const BoundsDb& db) {
    return Resolver{db, true}.resolve(q, v, d, k, 0);
}

BoundResult johnson_bound(unsigned q, unsigned v, unsigned d, unsigned k, const BoundsDb& db) {
    require_q(q);
    if (d % 2 != 0 || d < 2 || d > 2 * k || k > v) {
        throw std::invalid_argument("johnson_bound: requires even d with 2 <= d <= 2k and k <= v");
    }
    BoundResult inner = Resolver{db, false}.resolve(q, v - 1, d, k - 1, 1);
    BoundResult res;
    mpz_class num = (pow_z(q, v) - 1) * inner.value;
    mpz_class den = pow_z(q, k) - 1;
    res.value = num / den;  // floor
    res.method = BoundMethod::johnson;
    res.derivation = a_label(q, v, d, k) + " <= " + res.value.get_str() + " [johnson: floor((q^v-1)/(q^k-1) * " +
                     a_label(q, v - 1, d, k - 1) + ")]\n" + inner.derivation;

    if (d == 2 * k && k >= 2 && v % k == 1) {
        mpz_class spread = partial_spread_size(q, v, k);
        if (spread < res.value) {
            res.value = spread;
            res.method = BoundMethod::partial_spread;
        }
        res.derivation += "\n" + a_label(q, v, d, k) + " <= " + spread.get_str() +
                          " [partial spread], tighter value " + res.value.get_str();
    }
    if (auto rec = db.lookup(q, v, d, k)) {
        res.derivation += "\ndb records " + a_label(q, v, d, k) + " in [" +
                          (rec->lower ? rec->lower->get_str() : "?") + ", " +
                          (rec->upper ? rec->upper->get_str() : "?") + "] (" + rec->provenance + ")";
    }
    return res;
}

mpz_class degree_bound(unsigned q, unsigned v, unsigned d, unsigned k, unsigned dim_x, const BoundsDb& db) {
    if (dim_x > v) throw std::invalid_argument("degree_bound: dim(X) > v");
    if (dim_x >= k) return resolve_upper(q, dim_x, d, k, db).value;
    return resolve_upper(q, v - dim_x, d, k - dim_x, db).value;
}

mpz_class double_count_bound(unsigned q, unsigned v, unsigned k, unsigned l, const mpz_class& b) {
    require_q(q);
    if (l > v || k > v) throw std::invalid_argument("double_count_bound: requires l <= v and k <= v");
    if (b < 0) throw std::invalid_argument("double_count_bound: b must be >= 0");
    mpz_class num = gaussian_binomial(v, l, q) * b;
    mpz_class den = l <= k ? gaussian_binomial(k, l, q) : gaussian_binomial(v - k, l - k, q);
    return num / den;  // floor
}

mpz_class one_incidence_bound(unsigned q, unsigned k, unsigned c) {
    require_q(q);
    mpz_class base = pow_z(q, k) + 1;
    return base * (base - c);
}

mpq_class pair_threshold(unsigned q, unsigned v, unsigned k, const mpz_class& b) {
    require_q(q);
    if (k < 1 || k + 1 > v) throw std::invalid_argument("pair_threshold: requires 1 <= k <= v-1");
    if (b < 1) throw std::invalid_argument("pair_threshold: b must be >= 1");
    mpq_class num((pow_z(q, v) - 1) * (b - 1));
    mpq_class den(pow_z(q, v - k) + pow_z(q, k) - 2);
    mpq_class out = num / den;
    out.canonicalize();
    return out;
}

CascadeReport johnson_cascade_check(unsigned q, unsigned k, const mpz_class& improved_upper) {
    require_q(q);
    if (k < 3) throw std::invalid_argument("johnson_cascade_check: requires k >= 3");
    if (improved_upper < pow_z(q, 2 * k) + 1) {
        throw std::invalid_argument("johnson_cascade_check: improved upper bound below the lifted-MRD-plus-one floor");
    }
    // (k-1)-route via A_q(2k,2k-2;k-1) <= (q^2k - 1)/(q^{k-1} - 1)
    mpq_class lhs_exact = mpq_class(pow_z(q, 2 * k + 1) - 1) / mpq_class(pow_z(q, k) - 1);
    lhs_exact *= mpq_class(pow_z(q, 2 * k) - 1) / mpq_class(pow_z(q, k - 1) - 1);
    lhs_exact.canonicalize();
    mpz_class lhs;
    mpz_fdiv_q(lhs.get_mpz_t(), lhs_exact.get_num().get_mpz_t(), lhs_exact.get_den().get_mpz_t());

    mpq_class rhs_exact = mpq_class((pow_z(q, 2 * k + 1) - 1) * improved_upper) / mpq_class(pow_z(q, k + 1) - 1);
    rhs_exact.canonicalize();
    mpz_class rhs;
    mpz_fdiv_q(rhs.get_mpz_t(), rhs_exact.get_num().get_mpz_t(), rhs_exact.get_den().get_mpz_t());

    CascadeReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.holds = lhs <= rhs;
    std::ostringstream text;
    text << a_label(q, 2 * k + 1, 2 * k - 2, k) << " via k-1 route: floor((q^(2k+1)-1)/(q^k-1) * "
         << a_label(q, 2 * k, 2 * k - 2, k - 1) << ") <= " << lhs.get_str() << "\n"
         << "route through improved " << a_label(q, 2 * k, 2 * k - 2, k) << " <= " << improved_upper.get_str()
         << ": floor((q^(2k+1)-1)/(q^(k+1)-1) * " << improved_upper.get_str() << ") = " << rhs.get_str() << "\n"
         << (rep.holds ? "confirmed: the k-1 route is at least as strong, no improvement propagates"
                       : "VIOLATION: the improved bound would propagate");
    rep.text = text.str();
    return rep;
}

}  // namespace subcode
