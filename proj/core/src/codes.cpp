#include "subcode/codes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace subcode {

namespace {

std::string join_dims(const std::set<unsigned>& dims) {
    std::string s;
    for (unsigned d : dims) {
        if (!s.empty()) s += ",";
        s += std::to_string(d);
    }
    return s;
}

}  // namespace

std::string DimensionDistribution::render() const {
    std::string s;
    for (const auto& [dim, count] : multiplicities) {
        if (count == 0) continue;
        if (!s.empty()) s += " ";
        s += std::to_string(dim) + "^" + std::to_string(count);
    }
    return s;
}

SubspaceCode::SubspaceCode(FieldSpec field, unsigned ambient)
    : field_(field), v_(ambient), cache_(std::make_shared<DistanceCache>()) {}

SubspaceCode SubspaceCode::from_subspaces(FieldSpec field, unsigned ambient, std::vector<Subspace> codewords) {
    for (const Subspace& s : codewords) {
        if (s.ambient() != ambient || !(s.field() == field)) {
            throw std::invalid_argument("SubspaceCode: codeword ambient space mismatch");
        }
    }
    std::sort(codewords.begin(), codewords.end());
    auto dup = std::adjacent_find(codewords.begin(), codewords.end());
    if (dup != codewords.end()) {
        throw std::invalid_argument("SubspaceCode: duplicate codeword");
    }
    SubspaceCode code(field, ambient);
    code.words_ = std::move(codewords);
    return code;
}

bool SubspaceCode::contains(const Subspace& s) const {
    return std::binary_search(words_.begin(), words_.end(), s);
}

std::set<unsigned> SubspaceCode::dimension_set() const {
    std::set<unsigned> dims;
    for (const Subspace& s : words_) dims.insert(s.dim());
    return dims;
}

std::optional<unsigned> SubspaceCode::min_distance() const {
    std::call_once(cache_->once, [this] {
        if (words_.size() < 2) return;
        if (words_.size() > kDistanceScanCap) {
            throw std::invalid_argument("SubspaceCode::min_distance: " + std::to_string(words_.size()) +
                                        " codewords exceed the exact-scan cap " +
                                        std::to_string(kDistanceScanCap));
        }
        unsigned best = 2 * v_ + 1;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (std::size_t j = i + 1; j < words_.size(); ++j) {
                best = std::min(best, subspace_distance(words_[i], words_[j]));
            }
        }
        cache_->value = best;
    });
    return cache_->value;
}

std::string VerifyReport::render() const {
    std::ostringstream out;
    out << "N=" << size << "\n";
    if (min_distance) {
        out << "min_distance=" << *min_distance << "\n";
    } else {
        out << "min_distance=undefined\n";
    }
    out << "dimensions=" << join_dims(dims) << "\n";
    out << "dimension_distribution=" << distribution.render() << "\n";
    out << "constant_dimension=" << (constant_dimension ? "yes" : "no") << "\n";
    if (claim_checked) {
        out << "claim=" << (claim_ok ? "match" : "MISMATCH") << "\n";
        for (const std::string& m : claim_mismatches) out << "claim_mismatch: " << m << "\n";
    }
    return out.str();
}

VerifyReport verify(const SubspaceCode& code, const std::optional<ClaimSpec>& claim) {
    VerifyReport rep;
    rep.size = code.size();
    rep.min_distance = code.min_distance();
    rep.dims = code.dimension_set();
    rep.constant_dimension = rep.dims.size() == 1;
    rep.distribution = dimension_distribution(code);
    if (claim) {
        rep.claim_checked = true;
        if (claim->size && *claim->size != rep.size) {
            rep.claim_mismatches.push_back("N: claimed " + std::to_string(*claim->size) + ", computed " +
                                           std::to_string(rep.size));
        }
        if (claim->distance) {
            if (!rep.min_distance) {
                rep.claim_mismatches.push_back("d: claimed " + std::to_string(*claim->distance) +
                                               ", but distance is undefined for N <= 1");
            } else if (*claim->distance != *rep.min_distance) {
                rep.claim_mismatches.push_back("d: claimed " + std::to_string(*claim->distance) + ", computed " +
                                               std::to_string(*rep.min_distance));
            }
        }
        if (claim->dims && *claim->dims != rep.dims) {
            rep.claim_mismatches.push_back("K: claimed {" + join_dims(*claim->dims) + "}, computed {" +
                                           join_dims(rep.dims) + "}");
        }
        rep.claim_ok = rep.claim_mismatches.empty();
    }
    return rep;
}

DimensionDistribution dimension_distribution(const SubspaceCode& code) {
    DimensionDistribution dist;
    for (const Subspace& s : code.codewords()) ++dist.multiplicities[s.dim()];
    return dist;
}

SubspaceCode orthogonal_code(const SubspaceCode& code) {
    std::vector<Subspace> duals;
    duals.reserve(code.size());
    for (const Subspace& s : code.codewords()) duals.push_back(dual(s));
    return SubspaceCode::from_subspaces(code.field(), code.ambient(), std::move(duals));
}

std::vector<Subspace> incidence_set(const SubspaceCode& code, const Subspace& x) {
    if (x.ambient() != code.ambient() || !(x.field() == code.field())) {
        throw std::invalid_argument("incidence_set: ambient space mismatch");
    }
    std::vector<Subspace> hits;
    for (const Subspace& s : code.codewords()) {
        if (incident(s, x)) hits.push_back(s);
    }
    return hits;
}

IncidenceProfile incidence_profile(const SubspaceCode& code, unsigned l) {
    if (l > code.ambient()) throw std::invalid_argument("incidence_profile: l > v");
    if (gaussian_binomial(code.ambient(), l, code.field().q) > Grassmannian::kMaterializeCap) {
        throw std::invalid_argument("incidence_profile: [v,l]_q exceeds the materialization cap");
    }
    IncidenceProfile prof;
    Grassmannian g(code.field(), code.ambient(), l);
    g.for_each([&](const Subspace& x) {
        std::size_t count = 0;
        for (const Subspace& s : code.codewords()) {
            if (incident(s, x)) ++count;
        }
        prof.max = std::max(prof.max, count);
        ++prof.histogram[count];
    });
    return prof;
}

SubspaceCode shorten(const SubspaceCode& code, const Subspace& point, const Subspace& hyperplane) {
    const unsigned v = code.ambient();
    if (point.ambient() != v || hyperplane.ambient() != v) {
        throw std::invalid_argument("shorten: ambient space mismatch");
    }
    if (point.dim() != 1) throw std::invalid_argument("shorten: point must have dimension 1");
    if (hyperplane.dim() != v - 1) throw std::invalid_argument("shorten: hyperplane must have dimension v-1");
    if (incident(point, hyperplane)) throw std::invalid_argument("shorten: point must not lie in the hyperplane");
    if (code.size() >= 2 && *code.min_distance() < 2) {
        throw std::invalid_argument("shorten: requires minimum distance >= 2");
    }

    const std::vector<Subspace> through_p = incidence_set(code, point);
    const std::vector<Subspace> in_h = incidence_set(code, hyperplane);

    // coordinates w.r.t. h are the values at h's pivot columns
    std::vector<unsigned> h_pivots(hyperplane.dim());
    for (unsigned r = 0; r < hyperplane.dim(); ++r) h_pivots[r] = hyperplane.basis.leading_col(r);
    auto reembed = [&](const Subspace& s) {
        MatRows rows(code.field(), s.dim(), v - 1);
        for (unsigned r = 0; r < s.dim(); ++r) {
            for (unsigned c = 0; c < v - 1; ++c) rows.set(r, c, s.basis.get(r, h_pivots[c]));
        }
        return Subspace::from_rows(rows);
    };

    std::vector<Subspace> result;
    result.reserve(through_p.size() + in_h.size());
    for (const Subspace& u : through_p) result.push_back(reembed(meet(u, hyperplane)));
    for (const Subspace& u : in_h) {
        if (u.dim() > hyperplane.dim()) {
            throw std::invalid_argument("shorten: codeword strictly containing the hyperplane");
        }
        result.push_back(reembed(u));
    }
    const std::size_t expected = result.size();
    SubspaceCode out = [&] {
        try {
            return SubspaceCode::from_subspaces(code.field(), v - 1, std::move(result));
        } catch (const std::invalid_argument&) {
            throw std::logic_error("shorten: the two incidence parts unexpectedly collide");
        }
    }();
    if (out.size() != expected) {
        throw std::logic_error("shorten: the two incidence parts unexpectedly collide");
    }
    return out;
}

namespace {

struct Line {
    std::string text;
    std::size_t number;
};

std::vector<Line> content_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
        ++n;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        // trim
        auto b = raw.find_first_not_of(" \t\r");
        auto e = raw.find_last_not_of(" \t\r");
        if (b == std::string::npos) continue;
        lines.push_back({raw.substr(b, e - b + 1), n});
    }
    return lines;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("code file line " + std::to_string(line) + ": " + what);
}

unsigned parse_uint(const std::string& s, std::size_t line, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long val = std::stoul(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<unsigned>(val);
    } catch (const std::exception&) {
        parse_fail(line, "expected integer for " + what + ", got '" + s + "'");
    }
}

std::set<unsigned> parse_dim_list(const std::string& s, std::size_t line) {
    std::set<unsigned> dims;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) dims.insert(parse_uint(item, line, "dimension list"));
    if (dims.empty()) parse_fail(line, "empty dimension list");
    return dims;
}

ClaimSpec parse_claim(const Line& line) {
    ClaimSpec claim;
    std::stringstream ss(line.text);
    std::string tok;
    ss >> tok;  // the literal "claim"
    bool any = false;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) parse_fail(line.number, "malformed claim token '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "N") {
            claim.size = parse_uint(val, line.number, "N");
        } else if (key == "d") {
            claim.distance = parse_uint(val, line.number, "d");
        } else if (key == "K") {
            claim.dims = parse_dim_list(val, line.number);
        } else {
            parse_fail(line.number, "unknown claim field '" + key + "'");
        }
        any = true;
    }
    if (!any) parse_fail(line.number, "claim line carries no fields");
    return claim;
}

}  // namespace

ParsedCode parse_code(std::istream& in) {
    const std::vector<Line> lines = content_lines(in);
    if (lines.empty()) throw std::runtime_error("code file: missing 'q=<q> v=<v>' header");

    unsigned q = 0, v = 0;
    {
        std::stringstream ss(lines[0].text);
        std::string tq, tv;
        ss >> tq >> tv;
        if (tq.rfind("q=", 0) != 0 || tv.rfind("v=", 0) != 0) {
            parse_fail(lines[0].number, "expected header 'q=<q> v=<v>'");
        }
        q = parse_uint(tq.substr(2), lines[0].number, "q");
        v = parse_uint(tv.substr(2), lines[0].number, "v");
    }
    const FieldSpec field{[&] {
        try {
            return FieldSpec(q);
        } catch (const std::invalid_argument& e) {
            parse_fail(lines[0].number, e.what());
        }
    }()};
    if (v == 0) parse_fail(lines[0].number, "v must be >= 1");

    std::optional<ClaimSpec> claim;
    std::size_t first_word = 1;
    if (lines.size() > 1 && lines[1].text.rfind("claim", 0) == 0) {
        claim = parse_claim(lines[1]);
        first_word = 2;
    }

    std::vector<Subspace> words;
    std::vector<std::size_t> origin;
    for (std::size_t i = first_word; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.text == "-") {
            words.push_back(Subspace(MatRows(field, 0, v)));
            origin.push_back(line.number);
            continue;
        }
        std::vector<std::string> row_texts;
        std::stringstream ss(line.text);
        std::string row;
        while (std::getline(ss, row, ',')) {
            auto b = row.find_first_not_of(" \t");
            auto e = row.find_last_not_of(" \t");
            if (b == std::string::npos) parse_fail(line.number, "empty basis row");
            row_texts.push_back(row.substr(b, e - b + 1));
        }
        if (row_texts.empty()) parse_fail(line.number, "empty codeword line");
        MatRows rows(field, static_cast<unsigned>(row_texts.size()), v);
        for (unsigned r = 0; r < row_texts.size(); ++r) {
            if (row_texts[r].size() != v) {
                parse_fail(line.number, "basis row has length " + std::to_string(row_texts[r].size()) +
                                            ", expected " + std::to_string(v));
            }
            for (unsigned c = 0; c < v; ++c) {
                char ch = row_texts[r][c];
                if (ch < '0' || ch >= static_cast<char>('0' + q)) {
                    parse_fail(line.number, std::string("entry '") + ch + "' not in {0.." + std::to_string(q - 1) + "}");
                }
                rows.set(r, c, static_cast<std::uint8_t>(ch - '0'));
            }
        }
        words.push_back(Subspace::from_rows(rows));
        origin.push_back(line.number);
    }

    // duplicate detection with line attribution
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (words[i] == words[j]) {
                parse_fail(origin[j], "duplicate codeword (first seen at line " + std::to_string(origin[i]) + ")");
            }
        }
    }

    return ParsedCode{SubspaceCode::from_subspaces(field, v, std::move(words)), claim};
}

ParsedCode parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    try {
        return parse_code(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void emit_code(const SubspaceCode& code, std::ostream& out, const std::optional<ClaimSpec>& claim) {
    out << "q=" << unsigned(code.field().q) << " v=" << code.ambient() << "\n";
    if (claim) {
        out << "claim";
        if (claim->size) out << " N=" << *claim->size;
        if (claim->distance) out << " d=" << *claim->distance;
        if (claim->dims) out << " K=" << join_dims(*claim->dims);
        out << "\n";
    }
    for (const Subspace& s : code.codewords()) {
        if (s.dim() == 0) {
            out << "-\n";
            continue;
        }
        for (unsigned r = 0; r < s.dim(); ++r) {
            if (r) out << ",";
            out << s.basis.digit_row(r);
        }
        out << "\n";
    }
}

std::string emit_code_string(const SubspaceCode& code, const std::optional<ClaimSpec>& claim) {
    std::ostringstream out;
    emit_code(code, out, claim);
    return out.str();
}

}  // namespace subcode
