#include "arpaforge/design_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace arpaforge {

using nlohmann::json;

namespace {

long long to_count(const BigInt& m, const char* what) {
    if (!m.fits_slong_p())
        throw std::invalid_argument(std::string("serialize: ") + what + " exceeds 64-bit range");
    return m.get_si();
}

json array_to_json(const DesignArray& a) {
    json rows = json::array();
    for (const auto& [w, m] : canonical_rows(a)) {
        json row = json::object();
        row["row"] = w;
        row["mult"] = to_count(m, "multiplicity");
        rows.push_back(std::move(row));
    }
    return rows;
}

DesignArray array_from_json(const json& rows, int columns, int alphabet) {
    DesignArray a(columns, alphabet);
    for (const auto& entry : rows) {
        Word w = entry.at("row").get<Word>();
        long long mult = entry.value("mult", 1LL);
        a.add_rows(w, BigInt(static_cast<long>(mult)));
    }
    return a;
}

struct KindNames {
    const char* n;
    const char* cap;
    const char* first;
    const char* second;
};

KindNames names_for(DesignKind kind) {
    if (kind == DesignKind::arpa) return {"q", "p", "Q", "P"};
    return {"nu", "d", "N", "D"};
}

std::vector<BigInt> bigint_vector(const json& arr) {
    std::vector<BigInt> out;
    for (const auto& e : arr) out.emplace_back(static_cast<long>(e.get<long long>()));
    return out;
}

json bigint_array(const std::vector<BigInt>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back(to_count(e, "vector entry"));
    return arr;
}

}  // namespace

std::vector<std::pair<Word, BigInt>> canonical_rows(const DesignArray& a) {
    std::vector<std::pair<Word, BigInt>> rows(a.rows().begin(), a.rows().end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
        int wl = weight(interpretation(l.first));
        int wr = weight(interpretation(r.first));
        if (wl != wr) return wl > wr;
        return l.first < r.first;
    });
    return rows;
}

std::string pair_to_json(const DesignPair& pair) {
    KindNames nm = names_for(pair.kind);
    json out;
    out["kind"] = kind_str(pair.kind);
    out["params"] = {{nm.n, pair.n}, {nm.cap, pair.cap}, {"k", pair.k}};
    out["first"] = array_to_json(pair.first);
    out["second"] = array_to_json(pair.second);
    return out.dump(2);
}

DesignPair pair_from_json(const std::string& text) {
    json in = json::parse(text);
    std::string kind_name = in.at("kind").get<std::string>();
    DesignKind kind;
    if (kind_name == "arpa")
        kind = DesignKind::arpa;
    else if (kind_name == "cpa")
        kind = DesignKind::cpa;
    else
        throw std::invalid_argument("pair_from_json: kind must be 'arpa' or 'cpa'");

    KindNames nm = names_for(kind);
    const json& params = in.at("params");
    int n = params.at(nm.n).get<int>();
    int cap = params.at(nm.cap).get<int>();
    int k = params.at("k").get<int>();
    int alphabet = kind == DesignKind::arpa ? n : 2;
    return make_pair(kind, n, cap, k, array_from_json(in.at("first"), n, alphabet),
                     array_from_json(in.at("second"), n, alphabet));
}

std::string pair_to_text(const DesignPair& pair) {
    KindNames nm = names_for(pair.kind);
    std::ostringstream os;
    os << kind_str(pair.kind) << ' ' << nm.n << '=' << pair.n << ' ' << nm.cap << '=' << pair.cap
       << " k=" << pair.k << '\n';
    auto dump = [&](const char* label, const DesignArray& a) {
        os << label << ":\n";
        for (const auto& [w, m] : canonical_rows(a)) {
            os << word_str(w);
            if (m != 1) os << " x" << m;
            os << '\n';
        }
    };
    dump(nm.first, pair.first);
    dump(nm.second, pair.second);
    return os.str();
}

DesignPair pair_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    while (std::getline(is, header)) {
        if (!header.empty() && header.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream hs(header);
    std::string kind_name;
    hs >> kind_name;
    DesignKind kind;
    if (kind_name == "arpa")
        kind = DesignKind::arpa;
    else if (kind_name == "cpa")
        kind = DesignKind::cpa;
    else
        throw std::invalid_argument("pair_from_text: header must start with 'arpa' or 'cpa'");

    int n = -1, cap = -1, k = -1;
    std::string kv;
    while (hs >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("pair_from_text: malformed header field '" + kv + "'");
        std::string key = kv.substr(0, eq);
        int value = std::stoi(kv.substr(eq + 1));
        if (key == "q" || key == "nu")
            n = value;
        else if (key == "p" || key == "d")
            cap = value;
        else if (key == "k")
            k = value;
        else
            throw std::invalid_argument("pair_from_text: unknown header field '" + key + "'");
    }
    if (n < 0 || cap < 0 || k < 0)
        throw std::invalid_argument("pair_from_text: header must set all three parameters");

    int alphabet = kind == DesignKind::arpa ? n : 2;
    DesignArray first(n, alphabet), second(n, alphabet);
    DesignArray* current = nullptr;
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.back() == ':') {
            std::string label = line.substr(0, line.size() - 1);
            if (label == "Q" || label == "N")
                current = &first;
            else if (label == "P" || label == "D")
                current = &second;
            else
                throw std::invalid_argument("pair_from_text: unknown section '" + label + "'");
            continue;
        }
        if (!current) throw std::invalid_argument("pair_from_text: row before any section label");
        std::istringstream ls(line);
        Word w;
        long mult = 1;
        std::string tok;
        while (ls >> tok) {
            if (tok.size() > 1 && tok[0] == 'x') {
                mult = std::stol(tok.substr(1));
            } else {
                w.push_back(std::stoi(tok));
            }
        }
        current->add_rows(w, BigInt(mult));
    }
    return make_pair(kind, n, cap, k, std::move(first), std::move(second));
}

std::string pair_to_csv(const DesignPair& pair) {
    KindNames nm = names_for(pair.kind);
    std::ostringstream os;
    os << "side,mult";
    for (int j = 0; j < pair.n; ++j) os << ",c" << j;
    os << '\n';
    auto dump = [&](const char* label, const DesignArray& a) {
        for (const auto& [w, m] : canonical_rows(a)) {
            os << label << ',' << m;
            for (int c : w) os << ',' << c;
            os << '\n';
        }
    };
    dump(nm.first, pair.first);
    dump(nm.second, pair.second);
    return os.str();
}

std::string repvec_to_json(const RepVec& v) {
    json out;
    out["nu"] = v.nu;
    out["d"] = v.d;
    out["k"] = v.k;
    out["y"] = bigint_array(v.y);
    out["x"] = bigint_array(v.x);
    return out.dump(2);
}

RepVec repvec_from_json(const std::string& text) {
    json in = json::parse(text);
    RepVec v{in.at("nu").get<int>(), in.at("d").get<int>(), in.at("k").get<int>(),
             bigint_vector(in.at("y")), bigint_vector(in.at("x"))};
    validate(v);
    return v;
}

std::string zenc_to_json(const ZEnc& z) {
    json out;
    out["nu"] = z.nu;
    out["d"] = z.d;
    out["k"] = z.k;
    out["z"] = bigint_array(z.z);
    return out.dump(2);
}

ZEnc zenc_from_json(const std::string& text) {
    json in = json::parse(text);
    ZEnc z{in.at("nu").get<int>(), in.at("d").get<int>(), in.at("k").get<int>(),
           bigint_vector(in.at("z"))};
    validate(z);
    return z;
}

std::string ztilde_to_json(const ZTilde& t) {
    json entries = json::array();
    for (const auto& [w, m] : t.entries) {
        json e;
        e["row"] = w;
        e["value"] = to_count(m, "encoding value");
        entries.push_back(std::move(e));
    }
    json out;
    out["nu"] = t.nu;
    out["k"] = t.k;
    out["d_prime"] = t.d_prime;
    out["scale"] = to_count(t.scale, "scale");
    out["entries"] = entries;
    return out.dump(2);
}

ZTilde ztilde_from_json(const std::string& text) {
    json in = json::parse(text);
    ZTilde t;
    t.nu = in.at("nu").get<int>();
    t.k = in.at("k").get<int>();
    t.d_prime = in.at("d_prime").get<int>();
    t.scale = BigInt(static_cast<long>(in.at("scale").get<long long>()));
    for (const auto& e : in.at("entries")) {
        Word w = e.at("row").get<Word>();
        long long value = e.at("value").get<long long>();
        if (value == 0) throw std::invalid_argument("ztilde_from_json: zero entry");
        t.entries[w] = BigInt(static_cast<long>(value));
    }
    return t;
}

}  // namespace arpaforge
