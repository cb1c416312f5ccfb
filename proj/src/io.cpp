#include "fhsforge/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "fhsforge/error.hpp"

namespace fhsforge {

Json big_to_json(const BigInt& value)
{
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
        return value.convert_to<std::uint64_t>();
    return value.str();
}

BigInt big_from_json(const Json& value)
{
    if (value.is_number_unsigned())
        return BigInt(value.get<std::uint64_t>());
    if (value.is_number_integer())
        return BigInt(value.get<std::int64_t>());
    if (value.is_string()) {
        const auto& text = value.get_ref<const std::string&>();
        if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw Error(ErrorKind::ParseError, "not a decimal integer: \"" + text + "\"");
        return BigInt(text);
    }
    throw Error(ErrorKind::ParseError, "expected an integer");
}

Json to_json(const std::vector<CyclotomicCoset>& cosets)
{
    Json out = Json::array();
    for (const auto& c : cosets)
        out.push_back({{"representative", c.representative}, {"members", c.members}});
    return out;
}

Json to_json(const CosetFactorization& factorization)
{
    Json out;
    out["n"] = factorization.n;
    out["q"] = factorization.field->order();
    Json factors = Json::array();
    for (std::size_t i = 0; i < factorization.cosets.size(); ++i) {
        const auto& c = factorization.cosets[i];
        factors.push_back({{"representative", c.representative},
            {"members", c.members},
            {"polynomial", factorization.factors[i].coefficients()}});
    }
    out["factors"] = std::move(factors);
    return out;
}

Json to_json(const CyclicCode& code)
{
    const auto& field = *code.field();
    Json out;
    out["n"] = code.length();
    out["p"] = field.characteristic();
    out["m"] = field.degree();
    out["modulus"] = field.modulus();
    out["defining_set"] = code.defining_set();
    out["dimension"] = code.dimension();
    out["generator"] = code.generator().coefficients();
    return out;
}

Json to_json(const FhsSet& set)
{
    std::vector<const FhsSequence*> order;
    order.reserve(set.size());
    for (const auto& s : set.sequences())
        order.push_back(&s);
    std::sort(order.begin(), order.end(), [](auto a, auto b) { return *a < *b; });

    Json out;
    out["n"] = set.length();
    out["ell"] = set.alphabet_size();
    out["N"] = set.size();
    out["lambda"] = set.lambda() ? Json(*set.lambda()) : Json(nullptr);
    const auto& prov = set.provenance();
    out["provenance"] = {{"family", prov.family}, {"q", prov.q}, {"k", prov.k}, {"n", prov.n}};
    Json sequences = Json::array();
    for (auto s : order)
        sequences.push_back(s->symbols);
    out["sequences"] = std::move(sequences);
    return out;
}

namespace {

const Json& field(const Json& json, const char* key)
{
    if (!json.is_object() || !json.contains(key))
        throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
    return json.at(key);
}

std::uint64_t unsigned_field(const Json& json, const char* key)
{
    const auto& v = field(json, key);
    if (!(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)))
        throw Error(ErrorKind::ParseError, std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

} // namespace

FhsSet fhs_set_from_json(const Json& json)
{
    const std::uint64_t ell = unsigned_field(json, "ell");
    const auto& raw = field(json, "sequences");
    if (!raw.is_array())
        throw Error(ErrorKind::ParseError, "\"sequences\" must be an array");
    std::vector<FhsSequence> sequences;
    sequences.reserve(raw.size());
    for (const auto& row : raw) {
        if (!row.is_array())
            throw Error(ErrorKind::ParseError, "each sequence must be an array");
        FhsSequence s;
        s.symbols.reserve(row.size());
        for (const auto& v : row) {
            if (!(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) ||
                v.get<std::uint64_t>() > std::numeric_limits<Symbol>::max())
                throw Error(ErrorKind::ParseError, "symbols must be nonnegative 32-bit integers");
            s.symbols.push_back(v.get<Symbol>());
        }
        sequences.push_back(std::move(s));
    }

    Provenance prov;
    if (json.contains("provenance")) {
        const auto& p = json.at("provenance");
        if (!p.is_object())
            throw Error(ErrorKind::ParseError, "\"provenance\" must be an object");
        if (p.contains("family")) {
            if (!p.at("family").is_string())
                throw Error(ErrorKind::ParseError, "provenance family must be a string");
            prov.family = p.at("family").get<std::string>();
        }
        if (p.contains("q"))
            prov.q = unsigned_field(p, "q");
        if (p.contains("k"))
            prov.k = static_cast<unsigned>(unsigned_field(p, "k"));
        if (p.contains("n"))
            prov.n = static_cast<unsigned>(unsigned_field(p, "n"));
    }

    FhsSet set(ell, std::move(sequences), std::move(prov));
    if (json.contains("n") && unsigned_field(json, "n") != set.length())
        throw Error(ErrorKind::ParseError, "\"n\" disagrees with the sequence length");
    if (json.contains("N") && unsigned_field(json, "N") != set.size())
        throw Error(ErrorKind::ParseError, "\"N\" disagrees with the number of sequences");
    if (json.contains("lambda") && !json.at("lambda").is_null())
        set.record_lambda(static_cast<unsigned>(unsigned_field(json, "lambda")));
    return set;
}

FhsSet read_fhs_set(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    Json json;
    try {
        json = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    return fhs_set_from_json(json);
}

std::string to_csv(const FhsSet& set)
{
    std::vector<const FhsSequence*> order;
    for (const auto& s : set.sequences())
        order.push_back(&s);
    std::sort(order.begin(), order.end(), [](auto a, auto b) { return *a < *b; });
    std::ostringstream out;
    for (auto s : order) {
        for (std::size_t i = 0; i < s->size(); ++i)
            out << (i ? "," : "") << s->symbols[i];
        out << '\n';
    }
    return out.str();
}

Json to_json(const BoundReport& r)
{
    Json out;
    out["n"] = r.n;
    out["N"] = r.big_n.str();
    out["ell"] = r.ell;
    out["lambda"] = r.lambda;
    out["lambda_verified"] = r.lambda_verified;
    out["I"] = r.i.str();
    out["J"] = r.j.str();
    out["pf1"] = r.pf1.str();
    out["pf2"] = r.pf2.str();
    out["singleton_max_N"] = r.singleton_max_n ? Json(r.singleton_max_n->str()) : Json(nullptr);
    out["sphere_max_N"] = r.sphere_max_n ? Json(r.sphere_max_n->str()) : Json(nullptr);
    out["meets"] = {{"peng_fan", r.meets_peng_fan}, {"singleton", r.meets_singleton}, {"sphere", r.meets_sphere}};
    return out;
}

Json to_json(const IdentitySweepReport& r)
{
    Json out;
    out["n_max"] = r.n_max;
    out["N_max"] = r.big_n_max;
    out["l_max"] = r.ell_max;
    out["triples_checked"] = r.triples_checked;
    out["triples_skipped"] = r.triples_skipped;
    out["exact_equalities"] = r.exact_equalities;
    Json bad = Json::array();
    for (const auto& c : r.counterexamples)
        bad.push_back({{"n", c.n}, {"N", c.big_n}, {"ell", c.ell}, {"reason", c.reason}});
    out["counterexamples"] = std::move(bad);
    return out;
}

Json to_json(const FamilyInstance& inst)
{
    const auto& p = inst.params;
    Json out;
    out["family"] = std::string(to_string(p.family));
    out["q"] = p.q;
    if (p.family == Family::A || p.family == Family::Ding)
        out["m"] = p.m;
    out["n"] = inst.code.length();
    if (p.family != Family::Ding)
        out["k"] = p.k;
    if (p.family == Family::C)
        out["M"] = p.big_m;
    if (p.family == Family::A)
        out["p"] = p.p;
    out["claimed"] = {{"N", big_to_json(inst.claimed.big_n)}, {"lambda", inst.claimed.lambda}};

    Json verified;
    verified["class_count"] = inst.class_count_verified;
    verified["correlation"] = std::string(to_string(inst.correlation));
    verified["orbit_condition"] = inst.orbit_condition;
    verified["materialized"] = inst.materialized();
    if (inst.materialized())
        verified["N"] = inst.set->size();
    if (inst.min_distance)
        verified["min_distance"] = *inst.min_distance;
    if (inst.measured_lambda)
        verified["lambda"] = *inst.measured_lambda;
    if (inst.sampled) {
        verified["sampled"] = {{"lower_bound", inst.sampled->lower_bound}, {"samples", inst.sampled->samples},
            {"seed", inst.sampled->seed},
            {"upper_bound", inst.sampled->upper_bound ? Json(*inst.sampled->upper_bound) : Json(nullptr)}};
    }
    out["verified"] = std::move(verified);
    return out;
}

namespace {

// Like dump(2), except arrays of scalars stay on one line.
void pretty(const Json& j, int depth, std::string& out)
{
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad + Json(key).dump() + ": ";
            pretty(value, depth + 1, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else if (j.is_array() && !j.empty() &&
               std::any_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); })) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            pretty(j[i], depth + 1, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i)
            out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

} // namespace

std::string dump(const Json& json)
{
    std::string out;
    pretty(json, 0, out);
    return out + "\n";
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot write " + path);
    out << contents;
    if (!out)
        throw Error(ErrorKind::IoError, "failed writing " + path);
}

} // namespace fhsforge
