#include "qwe/io.hpp"

#include <sstream>

namespace qwe {
namespace {

bool entry_is_exact(const Json& e) {
    return e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string();
}

GRat parse_exact_entry(const Json& e) {
    return GRat(parse_rational(e[0].get<std::string>()), parse_rational(e[1].get<std::string>()));
}

CF parse_float_entry(const Json& e) {
    if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("operator entries must be [re, im] pairs");
    auto comp = [](const Json& x) -> double {
        if (x.is_string()) return static_cast<double>(parse_rational(x.get<std::string>()));
        return x.get<double>();
    };
    return {comp(e[0]), comp(e[1])};
}

std::vector<int> parse_dims(const Json& doc) {
    if (!doc.contains("dims")) throw std::invalid_argument("missing \"dims\"");
    return doc["dims"].get<std::vector<int>>();
}

}  // namespace

EnumPolynomial<Rational> parse_coeff_list(const std::string& text) {
    std::vector<Rational> coeffs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim whitespace
        auto b = token.find_first_not_of(" \t");
        auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty coefficient in list");
        coeffs.push_back(parse_rational(token.substr(b, e - b + 1)));
    }
    return EnumPolynomial<Rational>(std::move(coeffs));
}

std::string coeff_list_str(const EnumPolynomial<Rational>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        out += (i ? "," : "") + rational_str(p.coeffs[i]);
    return out;
}

AnyOp parse_operator_json(const Json& doc) {
    Factorization fact(parse_dims(doc));
    long dim = fact.total_dim();
    if (!doc.contains("entries")) throw std::invalid_argument("missing \"entries\"");
    const Json& entries = doc["entries"];
    if (static_cast<long>(entries.size()) != dim * dim)
        throw std::invalid_argument("entry count must be total_dim^2");
    bool exact = true;
    for (const auto& e : entries) exact = exact && entry_is_exact(e);
    if (exact) {
        Matrix<GRat> m(dim, dim);
        long k = 0;
        for (const auto& e : entries) {
            m(k / dim, k % dim) = parse_exact_entry(e);
            ++k;
        }
        return Op<GRat>(fact, std::move(m));
    }
    Matrix<CF> m(dim, dim);
    long k = 0;
    for (const auto& e : entries) {
        m(k / dim, k % dim) = parse_float_entry(e);
        ++k;
    }
    return Op<CF>(fact, std::move(m));
}

Json operator_json(const AnyOp& op) {
    Json doc;
    return std::visit(
        [&](const auto& o) {
            doc["dims"] = o.fact.dims;
            Json entries = Json::array();
            for (std::size_t r = 0; r < o.mat.rows(); ++r)
                for (std::size_t c = 0; c < o.mat.cols(); ++c)
                    entries.push_back(complex_json(o.mat(r, c)));
            doc["entries"] = std::move(entries);
            return doc;
        },
        op);
}

AnyCode parse_code_vectors_json(const Json& doc) {
    Factorization fact(parse_dims(doc));
    long dim = fact.total_dim();
    if (!doc.contains("vectors")) throw std::invalid_argument("missing \"vectors\"");
    const Json& vectors = doc["vectors"];
    if (vectors.empty()) throw std::invalid_argument("need at least one vector");
    bool exact = true;
    for (const auto& v : vectors)
        for (const auto& e : v) exact = exact && entry_is_exact(e);
    auto build = [&](auto tag) -> AnyCode {
        using S = decltype(tag);
        using T = ScalarTraits<S>;
        CodeStates<S> code;
        code.fact = fact;
        for (const auto& v : vectors) {
            if (static_cast<long>(v.size()) != dim)
                throw std::invalid_argument("vector length must equal total_dim");
            std::vector<S> col(dim);
            typename T::Real n2{};
            for (long k = 0; k < dim; ++k) {
                if constexpr (T::is_exact)
                    col[k] = parse_exact_entry(v[k]);
                else
                    col[k] = parse_float_entry(v[k]);
                n2 += T::abs2(col[k]);
            }
            code.columns.push_back(std::move(col));
            code.norm2.push_back(std::move(n2));
        }
        code.validate();
        return code;
    };
    if (exact) return build(GRat{});
    return build(CF{});
}

Json code_vectors_json(const AnyCode& code) {
    Json doc;
    return std::visit(
        [&](const auto& c) {
            doc["dims"] = c.fact.dims;
            Json vecs = Json::array();
            for (const auto& col : c.columns) {
                Json v = Json::array();
                for (const auto& x : col) v.push_back(complex_json(x));
                vecs.push_back(std::move(v));
            }
            doc["vectors"] = std::move(vecs);
            return doc;
        },
        code);
}

Json fuzz_records_json(const std::vector<FuzzRecord>& records) {
    Json arr = Json::array();
    for (const auto& r : records) {
        Json rec;
        rec["seed"] = r.seed;
        rec["trial"] = r.trial;
        rec["dims"] = r.dims;
        rec["rank_m"] = r.rank_m;
        rec["rank_n"] = r.rank_n;
        rec["min_shadow"] = r.min_shadow;
        rec["argmin_subset"] = mask_to_indices(r.argmin_t);
        rec["flagged"] = r.flagged;
        rec["exact_violation"] = r.exact_violation;
        arr.push_back(std::move(rec));
    }
    return arr;
}

}  // namespace qwe
