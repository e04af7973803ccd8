#include "subcode/ilp_models.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace subcode {

std::uint32_t IlpModel::add_variable(std::string name, std::int32_t objective_coeff) {
    if (index_.count(name)) throw std::invalid_argument("IlpModel: duplicate variable name " + name);
    std::uint32_t col = static_cast<std::uint32_t>(var_names.size());
    index_.emplace(name, col);
    var_names.push_back(std::move(name));
    objective.push_back(objective_coeff);
    return col;
}

std::optional<std::uint32_t> IlpModel::column_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ModelStats stats(const IlpModel& model) {
    ModelStats s;
    s.variables = model.var_names.size();
    s.constraints = model.constraints.size();
    for (const LinearConstraint& c : model.constraints) s.nonzeros += c.terms.size();
    return s;
}

namespace {

struct FamilySpec {
    unsigned a = 0;
    mpz_class rhs;
    std::string note;
};

std::vector<FamilySpec> family_specs(unsigned q, unsigned v, unsigned d, unsigned k, const BoundsDb& db,
                                     bool full_constraints) {
    const unsigned delta = d / 2;
    std::vector<FamilySpec> out;
    for (unsigned a = 1; a <= v - 1; ++a) {
        FamilySpec fam;
        fam.a = a;
        if (a <= k - delta) {
            BoundResult r = resolve_upper(q, v - a, d, k - a, db);
            fam.rhs = r.value;
            fam.note = "family a=" + std::to_string(a) + ": rhs " + fam.rhs.get_str() + " [" + to_string(r.method) +
                       "]\n" + r.derivation;
        } else if (a == k - delta + 1 || a == k + delta - 1) {
            fam.rhs = 1;
            fam.note = "family a=" + std::to_string(a) + ": rhs 1 [incidence at distance " + std::to_string(d) + "]";
        } else if (a >= k + delta) {
            BoundResult r = resolve_upper(q, a, d, k, db);
            fam.rhs = r.value;
            fam.note = "family a=" + std::to_string(a) + ": rhs " + fam.rhs.get_str() + " [" + to_string(r.method) +
                       "]\n" + r.derivation;
        } else {
            if (!full_constraints) continue;  // redundant middle dimensions
            fam.rhs = 1;
            fam.note = "family a=" + std::to_string(a) + ": rhs 1 [redundant middle dimension, kept on request]";
        }
        out.push_back(std::move(fam));
    }
    return out;
}

/// Incidence buckets for one dimension family: buckets[index of A] lists the
/// k-subspace columns U with U incident to A.
std::vector<std::vector<std::uint32_t>> incidence_buckets(const Grassmannian& big, unsigned a) {
    const FieldSpec field = big.field();
    const unsigned q = field.q;
    const unsigned v = big.ambient();
    const unsigned k = big.dim();
    Grassmannian ga(field, v, a);
    if (!ga.count_fits_u64() || ga.count() > Grassmannian::kMaterializeCap) {
        throw std::invalid_argument("incidence family a=" + std::to_string(a) + " exceeds the materialization cap");
    }
    const std::uint64_t na = ga.count_u64();
    std::vector<std::vector<std::uint32_t>> buckets(na);
    {
        // exact per-bucket population: [v-a, k-a]_q below, [a, k]_q above
        mpz_class per = a < k    ? gaussian_binomial(v - a, k - a, q)
                        : a > k ? gaussian_binomial(a, k, q)
                                : mpz_class(1);
        if (per.fits_ulong_p()) {
            std::size_t expect = mpz_get_ui(per.get_mpz_t());
            for (auto& b : buckets) b.reserve(expect);
        }
    }
    if (a == k) {
        const std::uint64_t nk = big.count_u64();
        for (std::uint64_t i = 0; i < nk; ++i) buckets[i].push_back(static_cast<std::uint32_t>(i));
        return buckets;
    }

    const bool fast = q == 2 && v <= 64;
    if (fast) {
        // local selectors: row masks of the a-subspaces of F_2^k (below) or
        // of the (a-k)-subspaces of the non-pivot coordinates (above)
        const unsigned loc_n = a < k ? k : v - k;
        const unsigned loc_k = a < k ? a : a - k;
        Grassmannian loc(field, loc_n, loc_k);
        std::vector<std::vector<std::uint64_t>> selectors;
        selectors.reserve(loc.count_u64());
        loc.for_each([&](const Subspace& s) {
            std::vector<std::uint64_t> rows(loc_k);
            for (unsigned r = 0; r < loc_k; ++r) rows[r] = s.basis.row_word(r);
            selectors.push_back(std::move(rows));
        });

        big.for_each([&](const Subspace& u) {
            const std::uint32_t iu = static_cast<std::uint32_t>(*u.index);
            std::array<std::uint64_t, 64> uw;
            for (unsigned r = 0; r < k; ++r) uw[r] = u.basis.row_word(r);
            std::array<std::uint64_t, 64> rows;
            if (a < k) {
                for (const auto& sel : selectors) {
                    for (unsigned r = 0; r < a; ++r) {
                        std::uint64_t combo = 0, bits = sel[r];
                        while (bits) {
                            combo ^= uw[std::countr_zero(bits)];
                            bits &= bits - 1;
                        }
                        rows[r] = combo;
                    }
                    unsigned rank = rref2_words({rows.data(), a});
                    if (rank != a) throw std::logic_error("incidence_buckets: local rank drop");
                    buckets[ga.index_of_rref_words({rows.data(), a})].push_back(iu);
                }
            } else {
                // non-pivot columns of U carry the quotient coordinates
                std::uint64_t pivot_mask = 0;
                for (unsigned r = 0; r < k; ++r) pivot_mask |= uw[r] & (~uw[r] + 1);
                std::array<unsigned, 64> nonpivot;
                unsigned np = 0;
                for (unsigned c = 0; c < v; ++c) {
                    if (!(pivot_mask & (std::uint64_t{1} << c))) nonpivot[np++] = c;
                }
                for (const auto& sel : selectors) {
                    for (unsigned r = 0; r < k; ++r) rows[r] = uw[r];
                    for (unsigned r = 0; r < a - k; ++r) {
                        std::uint64_t lifted = 0, bits = sel[r];
                        while (bits) {
                            lifted |= std::uint64_t{1} << nonpivot[std::countr_zero(bits)];
                            bits &= bits - 1;
                        }
                        rows[k + r] = lifted;
                    }
                    unsigned rank = rref2_words({rows.data(), a});
                    if (rank != a) throw std::logic_error("incidence_buckets: lifted rank drop");
                    buckets[ga.index_of_rref_words({rows.data(), a})].push_back(iu);
                }
            }
        });
        return buckets;
    }

    // generic field path
    const unsigned loc_n = a < k ? k : v - k;
    const unsigned loc_k = a < k ? a : a - k;
    Grassmannian loc(field, loc_n, loc_k);
    std::vector<Subspace> selectors = loc.materialize();
    big.for_each([&](const Subspace& u) {
        const std::uint32_t iu = static_cast<std::uint32_t>(*u.index);
        if (a < k) {
            for (const Subspace& sel : selectors) {
                MatRows rows(field, a, v);
                for (unsigned r = 0; r < a; ++r) {
                    for (unsigned i = 0; i < k; ++i) {
                        std::uint8_t e = sel.basis.get(r, i);
                        if (!e) continue;
                        for (unsigned c = 0; c < v; ++c) {
                            std::uint8_t x = u.basis.get(i, c);
                            if (x) rows.set(r, c, field.add(rows.get(r, c), field.mul(e, x)));
                        }
                    }
                }
                buckets[ga.index_of(Subspace::from_rows(rows))].push_back(iu);
            }
        } else {
            std::vector<unsigned> pivots(k), nonpivot;
            std::vector<bool> is_pivot(v, false);
            for (unsigned r = 0; r < k; ++r) {
                pivots[r] = u.basis.leading_col(r);
                is_pivot[pivots[r]] = true;
            }
            for (unsigned c = 0; c < v; ++c) {
                if (!is_pivot[c]) nonpivot.push_back(c);
            }
            for (const Subspace& sel : selectors) {
                MatRows rows(field, a, v);
                for (unsigned r = 0; r < k; ++r) {
                    for (unsigned c = 0; c < v; ++c) {
                        std::uint8_t e = u.basis.get(r, c);
                        if (e) rows.set(r, c, e);
                    }
                }
                for (unsigned r = 0; r < a - k; ++r) {
                    for (unsigned i = 0; i < v - k; ++i) {
                        std::uint8_t e = sel.basis.get(r, i);
                        if (e) rows.set(k + r, nonpivot[i], e);
                    }
                }
                buckets[ga.index_of(Subspace::from_rows(rows))].push_back(iu);
            }
        }
    });
    return buckets;
}

}  // namespace

IlpModel build_full_model(unsigned q, unsigned v, unsigned d, unsigned k, const BoundsDb& db, bool full_constraints) {
    if (d % 2 != 0 || d < 2 || d > 2 * k || 2 * k > v) {
        throw std::invalid_argument("build_full_model: requires even d with 2 <= d <= 2k <= v");
    }
    const FieldSpec field(q);
    Grassmannian big(field, v, k);
    if (big.count() > Grassmannian::kMaterializeCap) {
        throw std::invalid_argument("build_full_model: Grassmannian exceeds the materialization cap");
    }
    IlpModel model;
    model.kind = ModelKind::full;
    model.q = q;
    model.v = v;
    model.d = d;
    model.k = k;
    const std::uint64_t n = big.count_u64();
    for (std::uint64_t i = 0; i < n; ++i) model.add_variable("x_" + std::to_string(i), 1);

    std::vector<FamilySpec> fams;
    try {
        fams = family_specs(q, v, d, k, db, full_constraints);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("build_full_model: unresolvable right-hand side: ") + e.what());
    }
    model.notes.push_back("maximize the number of k-subspaces, pairwise subspace distance >= " + std::to_string(d));
    for (const FamilySpec& fam : fams) {
        std::vector<std::vector<std::uint32_t>> buckets = incidence_buckets(big, fam.a);
        model.notes.push_back(fam.note + "\nfamily a=" + std::to_string(fam.a) + " constraint count: " +
                              std::to_string(buckets.size()));
        for (std::size_t idx = 0; idx < buckets.size(); ++idx) {
            LinearConstraint c;
            c.name = "a" + std::to_string(fam.a) + "_" + std::to_string(idx);
            c.rel = Relation::le;
            c.rhs = fam.rhs;
            c.terms.reserve(buckets[idx].size());
            for (std::uint32_t col : buckets[idx]) c.terms.emplace_back(col, 1);
            model.constraints.push_back(std::move(c));
        }
    }
    return model;
}

IlpModel prescribe(IlpModel model, const SubspaceCode& codewords) {
    if (model.kind != ModelKind::full) {
        throw std::invalid_argument("prescribe: only full models accept prescriptions");
    }
    if (codewords.size() == 0) return model;
    if (codewords.ambient() != model.v || codewords.field().q != model.q) {
        throw std::invalid_argument("prescribe: codeword ambient space mismatch");
    }
    Grassmannian big(FieldSpec(model.q), model.v, model.k);
    std::vector<Subspace> fixed_words;
    for (const auto& [col, value] : model.fixings) {
        if (value == 1) fixed_words.push_back(big.at(std::stoull(model.var_names[col].substr(2))));
    }
    for (const Subspace& s : codewords.codewords()) {
        if (s.dim() != model.k) {
            throw std::invalid_argument("prescribe: codeword dimension differs from the model dimension");
        }
        fixed_words.push_back(s);
    }
    for (std::size_t i = 0; i < fixed_words.size(); ++i) {
        for (std::size_t j = i + 1; j < fixed_words.size(); ++j) {
            if (fixed_words[i] == fixed_words[j]) continue;
            unsigned dist = subspace_distance(fixed_words[i], fixed_words[j]);
            if (dist < model.d) {
                std::string a, b;
                for (unsigned r = 0; r < fixed_words[i].dim(); ++r) {
                    a += (r ? "," : "") + fixed_words[i].basis.digit_row(r);
                }
                for (unsigned r = 0; r < fixed_words[j].dim(); ++r) {
                    b += (r ? "," : "") + fixed_words[j].basis.digit_row(r);
                }
                throw std::invalid_argument("prescribe: codewords " + a + " and " + b + " have distance " +
                                            std::to_string(dist) + " < " + std::to_string(model.d));
            }
        }
    }
    for (const Subspace& s : codewords.codewords()) {
        std::uint64_t idx = big.index_of(s);
        auto col = model.column_of("x_" + std::to_string(idx));
        model.fixings[*col] = 1;
    }
    model.notes.push_back("prescribed " + std::to_string(codewords.size()) + " codewords as x_U = 1");
    return model;
}

ExtensionModel build_extension_model(const SubspaceCode& f, bool require_code) {
    if (f.field().q != 2 || f.ambient() != 7) {
        throw std::invalid_argument("build_extension_model: F must consist of solids of F_2^7");
    }
    for (const Subspace& s : f.codewords()) {
        if (s.dim() != 4) throw std::invalid_argument("build_extension_model: F must consist of solids of F_2^7");
    }
    if (require_code && f.size() >= 2) {
        const std::optional<unsigned> dist = f.min_distance();
        if (!dist || *dist < 6) {
            throw std::invalid_argument(
                "build_extension_model: F is not a (7,*,6;4)_2 code (solids must pairwise meet in <= 1 dimension)");
        }
    }

    ExtensionModel out;
    IlpModel& model = out.model;
    model.kind = ModelKind::extension;
    model.q = 2;
    model.v = 7;
    model.d = 4;
    model.k = 3;

    Grassmannian planes(FieldSpec(2), 7, 3);
    planes.for_each([&](const Subspace& u) {
        for (const Subspace& w : f.codewords()) {
            if (intersect_dim(u, w) > 1) return;
        }
        out.candidates.push_back(u);
    });
    for (const Subspace& u : out.candidates) model.add_variable("x_" + std::to_string(*u.index), 1);

    Grassmannian lines(FieldSpec(2), 7, 2);
    Grassmannian loc(FieldSpec(2), 3, 2);  // the 7 lines of a plane
    std::vector<std::vector<std::uint32_t>> buckets(lines.count_u64());
    for (std::uint32_t col = 0; col < out.candidates.size(); ++col) {
        const Subspace& u = out.candidates[col];
        std::array<std::uint64_t, 3> uw;
        for (unsigned r = 0; r < 3; ++r) uw[r] = u.basis.row_word(r);
        loc.for_each([&](const Subspace& sel) {
            std::array<std::uint64_t, 2> rows;
            for (unsigned r = 0; r < 2; ++r) {
                std::uint64_t combo = 0, bits = sel.basis.row_word(r);
                while (bits) {
                    combo ^= uw[std::countr_zero(bits)];
                    bits &= bits - 1;
                }
                rows[r] = combo;
            }
            rref2_words({rows.data(), 2});
            buckets[lines.index_of_rref_words({rows.data(), 2})].push_back(col);
        });
    }
    std::size_t empty = 0;
    for (std::size_t li = 0; li < buckets.size(); ++li) {
        if (buckets[li].empty()) {
            ++empty;
            continue;
        }
        LinearConstraint c;
        c.name = "line_" + std::to_string(li);
        c.rel = Relation::le;
        c.rhs = 1;
        c.terms.reserve(buckets[li].size());
        for (std::uint32_t col : buckets[li]) c.terms.emplace_back(col, 1);
        model.constraints.push_back(std::move(c));
    }
    model.notes.push_back("hyperplane relaxation z(F): max planes pairwise meeting in <= 1 dimension, F fixed");
    model.notes.push_back("|F| = " + std::to_string(f.size()) + ", |A(F)| = " + std::to_string(out.candidates.size()) +
                          ", lines with no candidate omitted: " + std::to_string(empty));
    model.notes.push_back("any (8,N,6;4)_2 code containing F in a hyperplane satisfies N <= z(F) + |F|");

    out.graph = conflict_graph_from_subspaces(out.candidates, 4);
    return out;
}

IlpModel build_blowup_model(const SubspaceCode& f3, const SubspaceCode& f4) {
    {
        const VerifyReport r3 = verify(f3);
        if (f3.field().q != 2 || f3.ambient() != 7 || r3.size != 17 || !r3.constant_dimension ||
            *r3.dims.begin() != 3 || !r3.min_distance || *r3.min_distance != 6) {
            throw std::invalid_argument("build_blowup_model: f3 does not verify as (7,17,6;3)_2");
        }
        const VerifyReport r4 = verify(f4);
        if (f4.field().q != 2 || f4.ambient() != 7 || r4.size != 16 || !r4.constant_dimension ||
            *r4.dims.begin() != 4 || !r4.min_distance || *r4.min_distance != 6) {
            throw std::invalid_argument("build_blowup_model: f4 does not verify as (7,16,6;4)_2");
        }
    }
    IlpModel model = build_full_model(2, 8, 6, 4, BoundsDb::seed_table());
    model.kind = ModelKind::blowup;
    Grassmannian solids(FieldSpec(2), 8, 4);
    Grassmannian points(FieldSpec(2), 8, 1);

    // embed F_2^7 as the hyperplane x_8 = 0
    auto embed_words = [](const Subspace& s) {
        std::vector<std::uint64_t> rows(s.dim());
        for (unsigned r = 0; r < s.dim(); ++r) rows[r] = s.basis.row_word(r);
        return rows;
    };
    std::vector<std::vector<std::uint64_t>> f3_words;
    for (const Subspace& u : f3.codewords()) f3_words.push_back(embed_words(u));

    // y variables for the points off the hyperplane, in enumeration order
    std::vector<std::pair<std::uint64_t, std::uint64_t>> q_points;  // (point index, packed vector)
    points.for_each([&](const Subspace& p) {
        std::uint64_t w = p.basis.row_word(0);
        if (w & (std::uint64_t{1} << 7)) q_points.emplace_back(*p.index, w);
    });
    std::vector<std::uint32_t> y_cols;
    y_cols.reserve(q_points.size());
    for (const auto& [pidx, w] : q_points) y_cols.push_back(model.add_variable("y_" + std::to_string(pidx), 0));

    // one linking constraint per point of Q
    for (std::size_t t = 0; t < q_points.size(); ++t) {
        LinearConstraint c;
        c.name = "link_" + std::to_string(q_points[t].first);
        c.rel = Relation::eq;
        c.rhs = 0;
        std::vector<std::uint32_t> cols;
        cols.reserve(f3_words.size());
        for (const auto& uw : f3_words) {
            std::array<std::uint64_t, 4> rows = {uw[0], uw[1], uw[2], q_points[t].second};
            unsigned rank = rref2_words({rows.data(), 4});
            if (rank != 4) throw std::logic_error("build_blowup_model: span of plane and off-point is not a solid");
            cols.push_back(static_cast<std::uint32_t>(solids.index_of_rref_words({rows.data(), 4})));
        }
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
            throw std::logic_error("build_blowup_model: two prescribed planes span the same solid");
        }
        for (std::uint32_t col : cols) c.terms.emplace_back(col, 1);
        c.terms.emplace_back(y_cols[t], -1);
        model.constraints.push_back(std::move(c));
    }
    {
        LinearConstraint pick;
        pick.name = "pick_one";
        pick.rel = Relation::eq;
        pick.rhs = 1;
        pick.terms.reserve(y_cols.size());
        for (std::uint32_t col : y_cols) pick.terms.emplace_back(col, 1);
        model.constraints.push_back(std::move(pick));
    }
    for (const Subspace& u : f4.codewords()) {
        std::vector<std::uint64_t> rows = embed_words(u);
        std::uint64_t idx = solids.index_of_rref_words(rows);
        model.fixings[*model.column_of("x_" + std::to_string(idx))] = 1;
    }
    model.notes.push_back("blow-up model z(F3,F4): F4 fixed in the hyperplane x_8=0, one new point forced via y_P");
    model.notes.push_back("|Q| = " + std::to_string(q_points.size()) + ", fixed x variables: " +
                          std::to_string(f4.size()));
    return model;
}

namespace {

class LineWriter {
  public:
    LineWriter(std::ostream& out, std::size_t width = 200) : out_(out), width_(width) {}

    void begin(const std::string& head) {
        line_ = head;
    }
    void add(const std::string& piece) {
        if (line_.size() + piece.size() + 1 > width_) {
            out_ << line_ << "\n";
            line_ = " ";
        }
        line_ += " " + piece;
    }
    void end() {
        out_ << line_ << "\n";
        line_.clear();
    }

  private:
    std::ostream& out_;
    std::size_t width_;
    std::string line_;
};

std::string term_text(std::int32_t coeff, const std::string& name) {
    if (coeff == 1) return "+ " + name;
    if (coeff == -1) return "- " + name;
    if (coeff < 0) return "- " + std::to_string(-coeff) + " " + name;
    return "+ " + std::to_string(coeff) + " " + name;
}

std::string kind_str(ModelKind k) {
    switch (k) {
        case ModelKind::full: return "full";
        case ModelKind::extension: return "extension";
        case ModelKind::blowup: return "blowup";
    }
    return "?";
}

}  // namespace

void export_model(const IlpModel& model, std::ostream& out, bool relaxed) {
    out << "\\ subspace code model: " << kind_str(model.kind) << " q=" << model.q << " v=" << model.v
        << " d=" << model.d << " k=" << model.k << "\n";
    for (const std::string& note : model.notes) {
        std::stringstream ss(note);
        std::string line;
        while (std::getline(ss, line)) out << "\\ " << line << "\n";
    }
    LineWriter writer(out);
    out << "Maximize\n";
    writer.begin(" obj:");
    for (std::size_t col = 0; col < model.var_names.size(); ++col) {
        if (model.objective[col]) writer.add(term_text(model.objective[col], model.var_names[col]));
    }
    writer.end();
    out << "Subject To\n";
    for (const LinearConstraint& c : model.constraints) {
        writer.begin(" " + c.name + ":");
        for (const auto& [col, coeff] : c.terms) writer.add(term_text(coeff, model.var_names[col]));
        writer.add((c.rel == Relation::le ? "<= " : "= ") + c.rhs.get_str());
        writer.end();
    }
    out << "Bounds\n";
    for (const auto& [col, value] : model.fixings) {
        out << " " << model.var_names[col] << " = " << value << "\n";
    }
    if (relaxed) {
        for (std::size_t col = 0; col < model.var_names.size(); ++col) {
            if (model.fixings.count(static_cast<std::uint32_t>(col))) continue;
            out << " 0 <= " << model.var_names[col] << " <= 1\n";
        }
    } else {
        out << "Binary\n";
        for (const std::string& name : model.var_names) out << " " << name << "\n";
    }
    out << "End\n";
}

std::string export_model_string(const IlpModel& model, bool relaxed) {
    std::ostringstream out;
    export_model(model, out, relaxed);
    return out.str();
}

std::string relax_note(const IlpModel& model) {
    return export_model_string(model, true);
}

namespace {

mpq_class parse_decimal(const std::string& text, std::size_t lineno) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    auto dot = s.find('.');
    std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
        throw std::runtime_error("solution line " + std::to_string(lineno) + ": malformed value '" + text + "'");
    }
    for (char ch : whole + frac) {
        if (ch < '0' || ch > '9') {
            throw std::runtime_error("solution line " + std::to_string(lineno) + ": malformed value '" + text + "'");
        }
    }
    mpz_class num(whole.empty() ? "0" : whole);
    mpz_class den = 1;
    for (char ch : frac) {
        num = num * 10 + (ch - '0');
        den *= 10;
    }
    mpq_class val(num, den);
    val.canonicalize();
    if (negative) val = -val;
    return val;
}

}  // namespace

Assignment import_solution(const IlpModel& model, std::istream& in) {
    Assignment assignment;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find_first_of("#\\");
        if (hash != std::string::npos) raw.erase(hash);
        std::stringstream ss(raw);
        std::string name, value;
        if (!(ss >> name)) continue;
        if (!(ss >> value)) {
            throw std::runtime_error("solution line " + std::to_string(lineno) + ": expected 'name value'");
        }
        auto col = model.column_of(name);
        if (!col) {
            throw std::runtime_error("solution line " + std::to_string(lineno) + ": unknown variable '" + name + "'");
        }
        mpq_class val = parse_decimal(value, lineno);
        if (val < 0 || val > 1) {
            throw std::runtime_error("solution line " + std::to_string(lineno) + ": value " + value +
                                     " outside [0,1]");
        }
        assignment[*col] = val;
    }
    return assignment;
}

Assignment assignment_from_code(const IlpModel& model, const SubspaceCode& code) {
    if (code.ambient() != model.v || code.field().q != model.q) {
        throw std::invalid_argument("assignment_from_code: code ambient space mismatch");
    }
    Grassmannian big(FieldSpec(model.q), model.v, model.k);
    Assignment assignment;
    for (const Subspace& s : code.codewords()) {
        if (s.dim() != model.k) {
            throw std::invalid_argument("assignment_from_code: codeword dimension differs from the model dimension");
        }
        auto col = model.column_of("x_" + std::to_string(big.index_of(s)));
        if (!col) throw std::invalid_argument("assignment_from_code: codeword is not a model variable");
        assignment[*col] = 1;
    }
    return assignment;
}

std::string CheckReport::render() const {
    std::ostringstream out;
    out << "feasible=" << (feasible ? "yes" : "no") << "\n";
    out << "binary=" << (binary ? "yes" : "no (fractional values present, LP relaxation)") << "\n";
    out << "fixings=" << (fixings_respected ? "respected" : "violated") << "\n";
    if (objective.get_den() == 1) {
        out << "objective=" << objective.get_num().get_str() << "\n";
    } else {
        mpz_class scaled = (objective.get_num() * 1000000) / objective.get_den();
        double approx = scaled.get_d() / 1e6;
        out << "objective=" << objective.get_num().get_str() << "/" << objective.get_den().get_str() << " (~"
            << approx << ")\n";
    }
    out << "violations=" << violations.size() << "\n";
    for (const std::string& v : violations) out << "violation: " << v << "\n";
    return out.str();
}

CheckReport check_solution(const IlpModel& model, const Assignment& assignment) {
    CheckReport report;
    std::vector<mpq_class> value(model.var_names.size(), mpq_class(0));
    for (const auto& [col, val] : assignment) {
        if (col >= value.size()) throw std::invalid_argument("check_solution: column out of range");
        value[col] = val;
        if (val < 0 || val > 1) {
            report.violations.push_back("variable " + model.var_names[col] + " = " + val.get_str() +
                                        " outside [0,1]");
        }
        if (val != 0 && val != 1) report.binary = false;
    }
    for (const auto& [col, fix] : model.fixings) {
        if (value[col] != fix) {
            report.fixings_respected = false;
            report.violations.push_back("fixing " + model.var_names[col] + " = " + std::to_string(fix) +
                                        " not respected (value " + value[col].get_str() + ")");
        }
    }
    for (const LinearConstraint& c : model.constraints) {
        mpq_class lhs(0);
        for (const auto& [col, coeff] : c.terms) {
            if (value[col] != 0) lhs += mpq_class(coeff) * value[col];
        }
        const bool ok = c.rel == Relation::le ? lhs <= mpq_class(c.rhs) : lhs == mpq_class(c.rhs);
        if (!ok) {
            report.violations.push_back("constraint " + c.name + ": lhs " + lhs.get_str() +
                                        (c.rel == Relation::le ? " exceeds rhs " : " differs from rhs ") +
                                        c.rhs.get_str());
        }
    }
    mpq_class obj(0);
    for (std::size_t col = 0; col < value.size(); ++col) {
        if (model.objective[col] && value[col] != 0) obj += mpq_class(model.objective[col]) * value[col];
    }
    report.objective = obj;
    report.feasible = report.violations.empty();
    return report;
}

}  // namespace subcode
