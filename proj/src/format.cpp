#include "wfusion/format.hpp"

#include <cctype>
#include <sstream>

namespace wfusion {

namespace {

void skip_ws(const std::string& t, std::size_t& i) {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

std::string trim(const std::string& t) {
    std::size_t a = 0, b = t.size();
    while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
    return t.substr(a, b - a);
}

Rational parse_unsigned_rational(const std::string& t, std::size_t& i) {
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == start) throw ParseError("expected a number in '" + t + "'");
    if (i < t.size() && t[i] == '/') {
        ++i;
        std::size_t dstart = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == dstart) throw ParseError("expected a denominator in '" + t + "'");
    }
    return parse_rational(t.substr(start, i - start));
}

// appends "coef*sym" (or bare coef when sym empty) with sign folding
void append_term(std::string& out, const Rational& coef, const std::string& sym) {
    if (coef == 0) return;
    bool neg = coef < 0;
    Rational mag = neg ? Rational(-coef) : coef;
    std::string body;
    if (sym.empty()) body = rat_str(mag);
    else if (mag == 1) body = sym;
    else body = rat_str(mag) + "*" + sym;
    if (out.empty()) out = neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
}

} // namespace

WeightValue parse_weight(int p, const std::string& text) {
    Rational g = 0, u = 0, v = 0;
    std::size_t i = 0;
    const std::string& t = text;
    skip_ws(t, i);
    if (i == t.size()) throw ParseError("empty weight");
    bool first = true;
    while (i < t.size()) {
        int sign = 1;
        skip_ws(t, i);
        if (t[i] == '+' || t[i] == '-') {
            if (t[i] == '-') sign = -1;
            ++i;
            skip_ws(t, i);
        } else if (!first) {
            throw ParseError("expected '+' or '-' in weight '" + text + "'");
        }
        first = false;
        Rational coef = 1;
        bool have_coef = false;
        if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            coef = parse_unsigned_rational(t, i);
            have_coef = true;
            skip_ws(t, i);
            if (i < t.size() && t[i] == '*') {
                ++i;
                skip_ws(t, i);
            } else {
                u += sign * coef; // plain rational term
                skip_ws(t, i);
                continue;
            }
        }
        if (i + 1 < t.size() && t[i] == 'a' && t[i + 1] == 'm') {
            v += sign * coef;
            i += 2;
        } else if (i < t.size() && t[i] == 'e') {
            g += sign * coef;
            i += 1;
        } else {
            if (have_coef) throw ParseError("expected 'e' or 'am' after '*' in '" + text + "'");
            throw ParseError("bad weight term in '" + text + "'");
        }
        skip_ws(t, i);
    }
    return WeightValue(p, g, u, v);
}

namespace {

std::string body_str(int p, const Rational& u, const Rational& v, const Rational& g) {
    std::string out;
    append_term(out, g, "e");
    if (int k = fold_k(p); k != 0) {
        // am is rational here; print the folded numeric value
        append_term(out, u - v / k, "");
    } else {
        append_term(out, u, "");
        append_term(out, v, "am");
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace

std::string weight_str(const WeightValue& w) { return body_str(w.p(), w.u(), w.v(), w.eps()); }

std::string qalpha_str(const QAlpha& x) {
    return body_str(x.p() == 0 ? 3 : x.p(), x.u(), x.v(), 0); // p=0 only for rational zero
}

namespace {

struct Bracketed {
    char head;
    std::vector<std::string> fields;
};

Bracketed split_label(const std::string& text, std::size_t arity_min, std::size_t arity_max) {
    std::string t = trim(text);
    if (t.size() < 3 || t[1] != '[' || t.back() != ']')
        throw ParseError("bad label: '" + text + "'");
    Bracketed b;
    b.head = t[0];
    std::string inner = t.substr(2, t.size() - 3);
    // weights contain no commas, so a flat split is safe
    std::size_t start = 0;
    while (true) {
        std::size_t pos = inner.find(',', start);
        if (pos == std::string::npos) {
            b.fields.push_back(trim(inner.substr(start)));
            break;
        }
        b.fields.push_back(trim(inner.substr(start, pos - start)));
        start = pos + 1;
    }
    if (b.fields.size() < arity_min || b.fields.size() > arity_max)
        throw ParseError("wrong number of fields in label '" + text + "'");
    return b;
}

int parse_int(const std::string& t) {
    Rational q = parse_rational(t);
    if (!is_integer(q)) throw ParseError("expected an integer: '" + t + "'");
    BigInt n = rat_num(q);
    if (n > 1000000 || n < -1000000) throw ParseError("integer out of range: '" + t + "'");
    return static_cast<int>(n);
}

} // namespace

SingletLabel parse_singlet_label(int p, const std::string& text) {
    Bracketed b = split_label(text, 1, 2);
    switch (b.head) {
    case 'M':
        if (b.fields.size() != 2) throw ParseError("M takes [r,s]: '" + text + "'");
        return make_atypical(p, parse_int(b.fields[0]), parse_int(b.fields[1]));
    case 'P':
        if (b.fields.size() != 2) throw ParseError("P takes [r,s]: '" + text + "'");
        return make_proj_cover(p, parse_int(b.fields[0]), parse_int(b.fields[1]));
    case 'F':
        if (b.fields.size() != 1) throw ParseError("F takes [w]: '" + text + "'");
        return make_fock(p, parse_weight(p, b.fields[0]));
    default:
        throw ParseError("unknown singlet label kind in '" + text + "'");
    }
}

std::string singlet_label_str(const SingletLabel& l) {
    switch (l.kind) {
    case SingletLabel::Kind::M:
        return "M[" + std::to_string(l.r) + "," + std::to_string(l.s) + "]";
    case SingletLabel::Kind::P:
        return "P[" + std::to_string(l.r) + "," + std::to_string(l.s) + "]";
    case SingletLabel::Kind::F:
        return "F[" + weight_str(l.w) + "]";
    }
    return {};
}

std::string singlet_object_str(const SingletObject& obj) {
    if (obj.terms.empty()) return "0";
    std::string out;
    for (const auto& [l, m] : obj.terms) {
        if (!out.empty()) out += " (+) ";
        out += std::to_string(m) + "*" + singlet_label_str(l);
    }
    return out;
}

ALabel parse_alabel(const ExtensionData& ext, const std::string& text) {
    Bracketed b = split_label(text, 2, 3);
    switch (b.head) {
    case 'W':
        if (b.fields.size() != 3) throw ParseError("W takes [r,s,l]: '" + text + "'");
        return make_W(ext, parse_int(b.fields[0]), parse_int(b.fields[1]), parse_halfint(b.fields[2]));
    case 'Q':
        if (b.fields.size() != 3) throw ParseError("Q takes [r,s,l]: '" + text + "'");
        return make_Q(ext, parse_int(b.fields[0]), parse_int(b.fields[1]), parse_halfint(b.fields[2]));
    case 'E':
        if (b.fields.size() != 2) throw ParseError("E takes [w,l]: '" + text + "'");
        return make_E(ext, parse_weight(ext.p, b.fields[0]), parse_halfint(b.fields[1]));
    default:
        throw ParseError("unknown label kind in '" + text + "'");
    }
}

std::string alabel_str(const ALabel& l) {
    switch (l.kind) {
    case ALabel::Kind::W:
        return "W[" + std::to_string(l.r) + "," + std::to_string(l.s) + "," + l.ell.str() + "]";
    case ALabel::Kind::Q:
        return "Q[" + std::to_string(l.r) + "," + std::to_string(l.s) + "," + l.ell.str() + "]";
    case ALabel::Kind::E:
        return "E[" + weight_str(l.w) + "," + l.ell.str() + "]";
    }
    return {};
}

std::string formal_str(const FormalObject& obj) {
    if (obj.terms.empty()) return "0";
    std::string out;
    for (const auto& [l, m] : obj.terms) {
        if (!out.empty()) out += " (+) ";
        out += std::to_string(m) + "*" + alabel_str(l);
    }
    return out;
}

nlohmann::json weight_json(const WeightValue& w) {
    return {{"e", rat_str(w.eps())}, {"u", rat_str(w.u())}, {"v", rat_str(w.v())}};
}

nlohmann::json alabel_json(const ALabel& l) {
    nlohmann::json j;
    switch (l.kind) {
    case ALabel::Kind::W: j["kind"] = "W"; break;
    case ALabel::Kind::E: j["kind"] = "E"; break;
    case ALabel::Kind::Q: j["kind"] = "Q"; break;
    }
    if (l.kind == ALabel::Kind::E) {
        j["weight"] = weight_json(l.w);
    } else {
        j["r"] = l.r;
        j["s"] = l.s;
    }
    j["ell2"] = l.ell.doubled();
    return j;
}

nlohmann::json formal_json(const FormalObject& obj) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [l, m] : obj.terms)
        terms.push_back({{"mult", m}, {"label", alabel_json(l)}});
    return {{"terms", terms}};
}

nlohmann::json report_json(const GradingReport& rep) {
    nlohmann::json j;
    j["lower_bounded"] = rep.lower_bounded;
    j["grading_restricted"] = rep.grading_restricted;
    j["highest_weight"] = rep.highest_weight;
    j["c1_cofinite"] = rep.c1_cofinite;
    switch (rep.lowest_kind) {
    case GradingReport::Lowest::Value: j["lowest_weight"] = qalpha_str(rep.lowest_weight); break;
    case GradingReport::Lowest::Unbounded: j["lowest_weight"] = "unbounded"; break;
    case GradingReport::Lowest::Generic: j["lowest_weight"] = nullptr; break;
    }
    return j;
}

std::string report_text(const GradingReport& rep) {
    auto onoff = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream os;
    os << "lower_bounded=" << onoff(rep.lower_bounded)
       << " grading_restricted=" << onoff(rep.grading_restricted)
       << " highest_weight=" << onoff(rep.highest_weight)
       << " c1_cofinite=" << onoff(rep.c1_cofinite) << " lowest_weight=";
    switch (rep.lowest_kind) {
    case GradingReport::Lowest::Value: os << qalpha_str(rep.lowest_weight); break;
    case GradingReport::Lowest::Unbounded: os << "unbounded"; break;
    case GradingReport::Lowest::Generic: os << "generic"; break;
    }
    return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += csv_escape(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string render_markdown(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return "";
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += "|";
        for (const auto& cell : rows[r]) out += " " + cell + " |";
        out += "\n";
        if (r == 0) {
            out += "|";
            for (std::size_t i = 0; i < rows[0].size(); ++i) out += " --- |";
            out += "\n";
        }
    }
    return out;
}

} // namespace wfusion
