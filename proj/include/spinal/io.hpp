#pragma once

/**
 * @file io.hpp
 * @brief Text formats: the word grammar, datum JSON, reports and a GAP
 * (AutomGrp) export of the wreath recursion.
 *
 * Word grammar (whitespace-separated terms):
 *
 *     word := "1" | term (SP term)*
 *     term := base ("^" int)?
 *     base := "a" | "b[" l "," i "]"        (also "b", "c" for EGS data)
 */

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinal/datum.hpp"
#include "spinal/hnn.hpp"
#include "spinal/lifting.hpp"
#include "spinal/nucleus.hpp"
#include "spinal/portrait.hpp"
#include "spinal/wreath.hpp"

namespace spinal {

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

inline std::string format_base(Base b, const Datum* d = nullptr) {
    if (b.is_a()) return "a";
    if (d && d->is_egs()) {
        if (b.l == d->p() && b.i == 1) return "b";
        if (b.l == 1 && b.i == 1) return "c";
    }
    return "b[" + std::to_string(b.l) + "," + std::to_string(b.i) + "]";
}

inline std::string format_word(const GroupWord& w, const Datum* d = nullptr) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& x : w) {
        if (!out.empty()) out += ' ';
        out += format_base(x.base, d);
        if (x.exp != 1) out += "^" + std::to_string(x.exp);
    }
    return out;
}

inline std::string format_word(const GroupWord& w, const Datum& d) { return format_word(w, &d); }

namespace detail {

inline Error syntax_error(std::size_t column, const std::string& msg) {
    return Error(ErrorKind::SyntaxError, "column " + std::to_string(column + 1) + ": " + msg);
}

inline std::uint64_t parse_index(std::string_view s, std::size_t& pos, std::size_t offset) {
    const std::size_t begin = pos;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
        if (v > 65535) throw syntax_error(offset + begin, "index too large");
        ++pos;
    }
    if (pos == begin) throw syntax_error(offset + pos, "expected a decimal index");
    if (v == 0) throw syntax_error(offset + begin, "indices start at 1");
    return v;
}

}  // namespace detail

/// Parses a word against `d`. Terms whose exponent vanishes mod p are dropped
/// and reported through `warnings`.
inline GroupWord parse_word(std::string_view text, const Datum& d, std::vector<std::string>* warnings = nullptr) {
    const std::uint32_t p = d.p();
    GroupWord w;
    std::size_t pos = 0;
    bool any = false, identity = false;
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view term = text.substr(pos, end - pos);
        const std::size_t col = pos;
        pos = end;

        if (term == "1") {
            if (any) throw detail::syntax_error(col, "\"1\" must be the whole word");
            identity = any = true;
            continue;
        }
        if (identity) throw detail::syntax_error(col, "\"1\" must be the whole word");
        any = true;

        std::size_t k = 0;
        Base base;
        if (term[0] == 'a') {
            base = Base::a();
            k = 1;
        } else if (term[0] == 'b' && term.size() > 1 && term[1] == '[') {
            k = 2;
            const auto l = detail::parse_index(term, k, col);
            if (k >= term.size() || term[k] != ',') throw detail::syntax_error(col + k, "expected ','");
            ++k;
            const auto i = detail::parse_index(term, k, col);
            if (k >= term.size() || term[k] != ']') throw detail::syntax_error(col + k, "expected ']'");
            ++k;
            base = Base::b(static_cast<std::uint16_t>(l), static_cast<std::uint16_t>(i));
        } else if ((term[0] == 'b' || term[0] == 'c') && d.is_egs()) {
            base = term[0] == 'b' ? Base::b(static_cast<std::uint16_t>(p), 1) : Base::b(1, 1);
            k = 1;
        } else if (term[0] == 'b' || term[0] == 'c') {
            throw Error(ErrorKind::UnknownGenerator, std::string("\"") + term[0] + "\" needs an EGS datum; use b[l,i]");
        } else {
            throw detail::syntax_error(col, "expected a generator");
        }

        std::int64_t exp = 1;
        if (k < term.size()) {
            if (term[k] != '^') throw detail::syntax_error(col + k, "expected '^'");
            ++k;
            bool neg = false;
            if (k < term.size() && term[k] == '-') {
                neg = true;
                ++k;
            }
            const std::size_t digits = k;
            std::int64_t v = 0;
            while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) {
                v = (v * 10 + (term[k] - '0')) % p;
                ++k;
            }
            if (k == digits) throw detail::syntax_error(col + k, "expected an exponent");
            if (k != term.size()) throw detail::syntax_error(col + k, "unexpected character");
            exp = neg ? -v : v;
        }
        if (!d.has_generator(base)) throw Error(ErrorKind::UnknownGenerator, format_base(base) + " is not in the datum");
        const std::uint32_t e = FpScalar::normalize(exp, p);
        if (e == 0) {
            if (warnings) warnings->push_back("ExponentZeroElided: term at column " + std::to_string(col + 1));
            continue;
        }
        w.push_back({base, e});
    }
    if (!any) throw detail::syntax_error(0, "empty word");
    return reduce(w, p);
}

inline Vertex parse_vertex(std::string_view text, std::uint32_t p) {
    Vertex v;
    if (text == "-") return v;
    for (std::size_t n = 0; n < text.size(); ++n) {
        const char c = text[n];
        if (!std::isdigit(static_cast<unsigned char>(c)) || static_cast<std::uint32_t>(c - '0') >= p)
            throw detail::syntax_error(n, "vertex letters are digits below p");
        v.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return v;
}

// ---------------------------------------------------------------------------
// Datum JSON
// ---------------------------------------------------------------------------

inline RawDatum parse_raw_datum(std::string_view bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::MalformedDocument, e.what());
    }
    auto malformed = [](const std::string& msg) { return Error(ErrorKind::MalformedDocument, msg); };
    if (!doc.is_object()) throw malformed("datum must be a JSON object");
    if (!doc.contains("p") || !doc["p"].is_number_integer()) throw malformed("\"p\" must be an integer");
    if (!doc.contains("E") || !doc["E"].is_array()) throw malformed("\"E\" must be an array");
    RawDatum raw;
    raw.p = doc["p"].get<std::int64_t>();
    for (std::size_t l = 0; l < doc["E"].size(); ++l) {
        const auto& coll = doc["E"][l];
        if (!coll.is_array()) throw malformed("E[" + std::to_string(l) + "] must be an array of vectors");
        auto& dst = raw.E.emplace_back();
        for (const auto& vec : coll) {
            if (!vec.is_array()) throw malformed("E[" + std::to_string(l) + "] holds a non-array vector");
            auto& v = dst.emplace_back();
            for (const auto& e : vec) {
                if (!e.is_number_integer()) throw malformed("vector entries must be integers");
                v.push_back(e.get<std::int64_t>());
            }
        }
    }
    return raw;
}

inline Datum parse_datum(std::string_view bytes, std::uint32_t prime_limit = kDefaultPrimeLimit) {
    return validate_datum(parse_raw_datum(bytes), prime_limit);
}

inline std::string format_datum(const Datum& d) {
    const RawDatum raw = d.raw();
    nlohmann::ordered_json doc;
    doc["p"] = raw.p;
    doc["E"] = nlohmann::ordered_json::array();
    for (const auto& coll : raw.E) {
        auto c = nlohmann::ordered_json::array();
        for (const auto& v : coll) c.push_back(v);
        doc["E"].push_back(std::move(c));
    }
    return doc.dump();
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// {"liftable_certified", "witness", "sigma"} with keys in a fixed order.
inline std::string witness_report_json(const Datum& d, const std::optional<LiftWitness>& w, const Endomorphism* sigma) {
    nlohmann::ordered_json doc;
    doc["liftable_certified"] = w.has_value();
    if (w)
        doc["witness"] = nlohmann::ordered_json{{"m", w->m}, {"k", w->k}, {"j", w->j}, {"f", w->f}, {"s", w->s}};
    else
        doc["witness"] = nullptr;
    nlohmann::ordered_json images = nlohmann::ordered_json::object();
    if (sigma)
        for (const auto& g : d.generators()) images[format_base(g, &d)] = format_word(sigma->image(g), &d);
    doc["sigma"] = images;
    return doc.dump(2);
}

inline std::string orbit_report_json(const OrbitReport& r) {
    nlohmann::ordered_json doc;
    doc["ball"] = nlohmann::ordered_json{{"K", r.kmax}, {"L", r.lmax}};
    doc["reached"] = r.reached;
    doc["total"] = r.total;
    doc["transitive_on_ball"] = r.transitive_on_ball();
    auto missed = nlohmann::ordered_json::array();
    for (const auto& v : r.missed) missed.push_back(format_hnn_vertex(v));
    doc["missed"] = missed;
    return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Portraits
// ---------------------------------------------------------------------------

inline void render_portrait_text(const Portrait& pt, const Nucleus& n, const Datum& d, std::string indent,
                                 std::string& out) {
    if (pt.is_leaf) {
        out += "[" + format_word(n.elements[pt.leaf], d) + "]\n";
        return;
    }
    out += pt.root.cycles() + "\n";
    for (std::size_t x = 0; x < pt.children.size(); ++x) {
        out += indent + "  " + std::to_string(x) + ": ";
        render_portrait_text(pt.children[x], n, d, indent + "  ", out);
    }
}

inline std::string portrait_text(const Portrait& pt, const Nucleus& n, const Datum& d) {
    std::string out;
    render_portrait_text(pt, n, d, "", out);
    return out;
}

inline std::string portrait_dot(const Portrait& pt, const Nucleus& n, const Datum& d) {
    std::string out = "digraph portrait {\n";
    std::size_t counter = 0;
    auto rec = [&](auto&& self, const Portrait& node) -> std::size_t {
        const std::size_t id = counter++;
        const std::string label = node.is_leaf ? format_word(n.elements[node.leaf], d) : node.root.cycles();
        out += "  v" + std::to_string(id) + " [label=\"" + label + "\"" + (node.is_leaf ? ", shape=box" : "") + "];\n";
        for (std::size_t x = 0; x < node.children.size(); ++x) {
            const std::size_t child = self(self, node.children[x]);
            out += "  v" + std::to_string(id) + " -> v" + std::to_string(child) + " [label=\"" + std::to_string(x) +
                   "\"];\n";
        }
        return id;
    };
    rec(rec, pt);
    out += "}\n";
    return out;
}

// ---------------------------------------------------------------------------
// GAP export (AutomGrp "AutomatonGroup" declaration)
// ---------------------------------------------------------------------------

inline std::string gap_name(Base b, const Datum& d) {
    if (b.is_a()) return "a";
    if (d.is_egs()) return format_base(b, &d);
    return "b" + std::to_string(b.l) + "_" + std::to_string(b.i);
}

inline std::string export_gap(const Datum& d) {
    const WreathTable t = build_recursion(d);
    const std::uint32_t p = d.p();
    std::ostringstream out;
    out << "# multi-EGS group, p = " << p << ", datum " << format_datum(d) << "\n";
    out << "G := AutomatonGroup(\"\\\n";
    const auto& gens = t.generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        out << gap_name(gens[g].base, d) << " = (";
        for (std::uint32_t x = 0; x < p; ++x) {
            if (x) out << ", ";
            const auto& s = gens[g].sections[x];
            if (s.empty()) {
                out << "1";
                continue;
            }
            for (std::size_t n = 0; n < s.size(); ++n) {
                if (n) out << "*";
                out << gap_name(s[n].base, d);
                if (s[n].exp != 1) out << "^" << s[n].exp;
            }
        }
        out << ")";
        if (!gens[g].root.is_identity()) out << gens[g].root.cycles(1);
        out << (g + 1 < gens.size() ? ",\\\n" : "\\\n");
    }
    out << "\");\n";
    return out.str();
}

/// Reads back an export_gap block into a wreath table.
inline WreathTable parse_gap(std::string_view text) {
    auto bad = [](const std::string& m) { return Error(ErrorKind::MalformedDocument, "GAP block: " + m); };
    const auto open = text.find("AutomatonGroup(\"");
    if (open == std::string_view::npos) throw bad("no AutomatonGroup declaration");
    const auto close = text.find("\")", open);
    if (close == std::string_view::npos) throw bad("unterminated declaration");
    std::string body;
    for (char c : text.substr(open + 16, close - open - 16))
        if (c != '\\' && c != '\n' && c != ' ') body += c;

    // Split generator definitions at top-level commas.
    std::vector<std::string> defs;
    int depth = 0;
    std::string cur;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            defs.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) defs.push_back(cur);

    struct Def {
        std::string name;
        std::vector<std::string> sections;
        std::string perm;
    };
    std::vector<Def> parsed;
    for (const auto& def : defs) {
        const auto eq = def.find('=');
        if (eq == std::string::npos || def.size() <= eq + 1 || def[eq + 1] != '(') throw bad("malformed definition " + def);
        const auto rp = def.find(')', eq);
        Def d{def.substr(0, eq), {}, def.substr(rp + 1)};
        std::string secs = def.substr(eq + 2, rp - eq - 2);
        std::size_t start = 0;
        while (true) {
            const auto comma = secs.find(',', start);
            d.sections.push_back(secs.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        parsed.push_back(std::move(d));
    }
    if (parsed.empty()) throw bad("no generators");
    const auto p = static_cast<std::uint32_t>(parsed.front().sections.size());

    auto base_of = [&](const std::string& name) -> Base {
        if (name == "a") return Base::a();
        if (name == "b") return Base::b(static_cast<std::uint16_t>(p), 1);
        if (name == "c") return Base::b(1, 1);
        const auto us = name.find('_');
        if (name.size() < 4 || name[0] != 'b' || us == std::string::npos) throw bad("unknown generator " + name);
        return Base::b(static_cast<std::uint16_t>(std::stoul(name.substr(1, us - 1))),
                       static_cast<std::uint16_t>(std::stoul(name.substr(us + 1))));
    };

    std::vector<WreathTable::Generator> gens;
    for (const auto& d : parsed) {
        if (d.sections.size() != p) throw bad("inconsistent number of sections");
        WreathTable::Generator g{base_of(d.name), Perm::identity(p), {}};
        for (const auto& s : d.sections) {
            GroupWord w;
            if (s != "1") {
                std::size_t start = 0;
                while (true) {
                    const auto star = s.find('*', start);
                    const std::string tok = s.substr(start, star - start);
                    const auto caret = tok.find('^');
                    const std::uint32_t e = caret == std::string::npos ? 1u : static_cast<std::uint32_t>(std::stoul(tok.substr(caret + 1)));
                    w.push_back({base_of(tok.substr(0, caret)), e});
                    if (star == std::string::npos) break;
                    start = star + 1;
                }
            }
            g.sections.push_back(reduce(w, p));
        }
        // Cycle notation over 1-based letters.
        std::vector<std::uint32_t> im = Perm::identity(p).images();
        std::size_t k = 0;
        while (k < d.perm.size()) {
            if (d.perm[k] != '(') throw bad("malformed permutation " + d.perm);
            const auto end = d.perm.find(')', k);
            std::vector<std::uint32_t> cyc;
            std::string inner = d.perm.substr(k + 1, end - k - 1);
            std::size_t start = 0;
            while (!inner.empty()) {
                const auto comma = inner.find(',', start);
                cyc.push_back(static_cast<std::uint32_t>(std::stoul(inner.substr(start, comma - start))) - 1);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            for (std::size_t n = 0; n < cyc.size(); ++n) im[cyc[n]] = cyc[(n + 1) % cyc.size()];
            k = end + 1;
        }
        g.root = Perm(im);
        gens.push_back(std::move(g));
    }
    return WreathTable(p, std::move(gens));
}

}  // namespace spinal
