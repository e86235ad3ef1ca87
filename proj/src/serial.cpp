#include "segdel/serial.hpp"

#include <cstdio>
#include <fstream>

namespace segdel {

json to_json(const ChannelParams& p) {
    return json{{"q", p.q},         {"b", p.b},
                {"t", p.t},         {"gamma", p.gamma},
                {"delta", p.delta}, {"rho", p.rho},
                {"digest_symbols", p.digest_symbols}};
}

ChannelParams params_from_json(const json& j) {
    ChannelParams p;
    p.q = j.at("q").get<unsigned>();
    p.b = j.at("b").get<unsigned>();
    p.t = j.at("t").get<unsigned>();
    p.gamma = j.at("gamma").get<unsigned>();
    if (j.contains("delta") || j.contains("rho") || j.contains("digest_symbols")) {
        p.delta = j.value("delta", std::uint64_t(0));
        p.rho = j.value("rho", std::uint64_t(0));
        p.digest_symbols = j.value("digest_symbols", 0u);
        ChannelParams defaults = ChannelParams::with_defaults(p.q, p.b, p.t, p.gamma);
        if (p.delta == 0) p.delta = defaults.delta;
        if (p.rho == 0) p.rho = defaults.rho;
        if (p.digest_symbols == 0) p.digest_symbols = defaults.digest_symbols;
    } else {
        p = ChannelParams::with_defaults(p.q, p.b, p.t, p.gamma);
    }
    p.validate_channel();
    return p;
}

json to_json(const LabelingScheme& s) {
    return json{{"P1", s.p1}, {"P2", s.p2}, {"beta", s.beta}, {"N", s.digest_symbols}};
}

LabelingScheme scheme_from_json(const json& j) {
    LabelingScheme s;
    s.p1 = j.at("P1").get<std::uint64_t>();
    s.p2 = j.at("P2").get<std::uint64_t>();
    s.beta = j.at("beta").get<std::uint64_t>();
    s.digest_symbols = j.at("N").get<unsigned>();
    s.validate();
    return s;
}

json to_json(const SyndromeTuple& t) {
    return json{{"alpha", t.alpha}, {"beta", t.beta}, {"eta", t.eta}, {"zeta", t.zeta}};
}

SyndromeTuple tuple_from_json(const json& j) {
    SyndromeTuple t;
    t.alpha = j.at("alpha").get<std::uint32_t>();
    t.beta = j.at("beta").get<std::uint64_t>();
    t.eta = j.at("eta").get<std::uint64_t>();
    t.zeta = j.at("zeta").get<std::uint64_t>();
    return t;
}

json to_json(const ErrorPattern& p) {
    json arr = json::array();
    for (const auto& e : p.bursts) {
        if (e)
            arr.push_back(json{{"burst", *e}});
        else
            arr.push_back("none");
    }
    return arr;
}

ErrorPattern pattern_from_json(const json& j) {
    ErrorPattern p;
    for (const auto& e : j) {
        if (e.is_string() && e.get<std::string>() == "none")
            p.bursts.push_back(std::nullopt);
        else if (e.is_object() && e.contains("burst"))
            p.bursts.push_back(e.at("burst").get<std::uint32_t>());
        else
            throw std::invalid_argument("ErrorPattern: entry must be \"none\" or {\"burst\": a}");
    }
    return p;
}

json to_json(const Word& w) {
    json arr = json::array();
    for (Symbol s : w.symbols()) arr.push_back(unsigned(s));
    return arr;
}

namespace {
Word word_from_json(const json& j, unsigned q) {
    std::vector<Symbol> sym;
    sym.reserve(j.size());
    for (const auto& v : j) sym.push_back(static_cast<Symbol>(v.get<unsigned>()));
    return Word(std::move(sym), q);
}
}  // namespace

json to_json(const Codebook& book) {
    json j;
    j["version"] = 1;
    j["q"] = book.params.q;
    j["b"] = book.params.b;
    j["t"] = book.params.t;
    j["gamma"] = book.params.gamma;
    j["delta"] = book.params.delta;
    j["rho"] = book.params.rho;
    j["N"] = book.scheme.digest_symbols;
    j["scheme"] = to_json(book.scheme);
    j["forbidden_positions"] = book.forbidden_positions;
    j["density_flag"] = book.density_enforced;
    j["M"] = book.common_size;
    json branches = json::array();
    for (const auto& br : book.branches) {
        json entry;
        entry["tuple"] = to_json(br.tuple);
        entry["M"] = br.codewords.size();
        json words = json::array();
        for (const Word& w : br.codewords) words.push_back(to_json(w));
        entry["codewords"] = words;
        branches.push_back(entry);
    }
    j["branches"] = branches;
    return j;
}

Codebook codebook_from_json(const json& j) {
    if (j.at("version").get<int>() != 1)
        throw std::invalid_argument("codebook: unsupported file version");
    Codebook book;
    book.params.q = j.at("q").get<unsigned>();
    book.params.b = j.at("b").get<unsigned>();
    book.params.t = j.at("t").get<unsigned>();
    book.params.gamma = j.at("gamma").get<unsigned>();
    book.params.delta = j.at("delta").get<std::uint64_t>();
    book.params.rho = j.at("rho").get<std::uint64_t>();
    book.scheme = scheme_from_json(j.at("scheme"));
    book.params.digest_symbols = book.scheme.digest_symbols;
    book.density_enforced = j.at("density_flag").get<bool>();
    book.forbidden_positions = j.at("forbidden_positions").get<std::vector<std::uint32_t>>();
    book.common_size = j.at("M").get<std::size_t>();
    for (const auto& entry : j.at("branches")) {
        CodebookBranch br;
        br.tuple = tuple_from_json(entry.at("tuple"));
        if (entry.at("M").get<std::size_t>() != entry.at("codewords").size())
            throw std::invalid_argument("codebook: branch M differs from its list size");
        for (const auto& w : entry.at("codewords"))
            br.codewords.push_back(word_from_json(w, book.params.q));
        book.branches.push_back(std::move(br));
    }
    book.validate();
    return book;
}

json to_json(const CertificationReport& rep) {
    json j;
    j["scheme"] = to_json(rep.scheme);
    j["q"] = rep.q;
    j["n"] = rep.length;
    j["t"] = rep.t;
    j["domain"] = rep.exhaustive ? "exhaustive" : "sampled";
    if (!rep.exhaustive) j["seed"] = rep.seed;
    j["words_tested"] = rep.words_tested;
    j["receptions_tested"] = rep.receptions_tested;
    j["certified"] = rep.certified();
    j["warnings"] = rep.warnings;
    json fails = json::array();
    for (const auto& f : rep.failures) {
        json e;
        e["input"] = to_json(f.input);
        e["received"] = to_json(f.received);
        e["outcome"] = f.outcome == RecoverStatus::ambiguous ? "ambiguous" : "no_candidate";
        json cands = json::array();
        for (const Word& c : f.candidates) cands.push_back(to_json(c));
        e["candidates"] = cands;
        fails.push_back(e);
    }
    j["failures"] = fails;
    return j;
}

json to_json(const RedundancyReport& rep) {
    json j;
    j["params"] = to_json(rep.params);
    if (rep.achieved_bits_per_segment) j["achieved_bits_per_segment"] = *rep.achieved_bits_per_segment;
    if (rep.rate_bits_per_symbol) j["rate_bits_per_symbol"] = *rep.rate_bits_per_symbol;
    j["class_size_bound"] = rep.class_size_bound;
    j["redundancy_expression"] = rep.redundancy_expression;
    j["redundancy_leading_bits"] = rep.redundancy_leading_bits;
    j["compression_total_symbols"] = rep.compression_total_symbols;
    j["confusable_bound"] = rep.confusable_bound;
    json rows = json::array();
    for (const auto& r : rep.comparison) {
        json e;
        e["alphabet"] = r.alphabet;
        e["error_type"] = r.error_type;
        e["construction"] = r.construction;
        e["formula"] = r.formula;
        e["b"] = r.b;
        if (r.bits) e["bits"] = *r.bits;
        rows.push_back(e);
    }
    j["comparison"] = rows;
    return j;
}

std::vector<std::vector<std::string>> comparison_csv(const std::vector<ComparisonRow>& rows) {
    std::vector<std::vector<std::string>> out;
    out.push_back({"alphabet", "error_type", "construction", "formula", "b", "bits"});
    for (const auto& r : rows) {
        out.push_back({r.alphabet, r.error_type, r.construction, r.formula, std::to_string(r.b),
                       r.bits ? format_double(*r.bits) : ""});
    }
    return out;
}

std::string stable_dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

namespace {
void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("emit: write to " + path.string() + " failed");
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}
}  // namespace

void emit(const json& doc, const std::string& format, const std::filesystem::path& path) {
    if (format != "json") throw std::invalid_argument("emit: unknown format '" + format + "'");
    write_file(path, stable_dump(doc));
}

void emit(const std::vector<std::vector<std::string>>& rows, const std::string& format,
          const std::filesystem::path& path) {
    if (format != "csv") throw std::invalid_argument("emit: unknown format '" + format + "'");
    std::string text;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ',';
            text += csv_escape(row[i]);
        }
        text += '\n';
    }
    write_file(path, text);
}

}  // namespace segdel
