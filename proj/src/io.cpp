#include "brk/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace brkit {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Signed magnitudes of a sum written as "x + y - z": the leading sign is
// attached to the first token, later signs stand alone.
std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::pair<int, std::string>> out;
    std::string tok;
    if (!(in >> tok)) throw std::runtime_error("empty expression");
    if (tok == "+" || tok == "-") throw std::runtime_error("dangling sign in '" + s + "'");
    if (tok[0] == '-')
        out.emplace_back(-1, tok.substr(1));
    else
        out.emplace_back(1, tok);
    while (in >> tok) {
        int sign;
        if (tok == "+")
            sign = 1;
        else if (tok == "-")
            sign = -1;
        else
            throw std::runtime_error("expected '+' or '-' before '" + tok + "'");
        if (!(in >> tok)) throw std::runtime_error("dangling sign in '" + s + "'");
        out.emplace_back(sign, tok);
    }
    for (auto& [sign, body] : out)
        if (body.empty()) throw std::runtime_error("empty term in '" + s + "'");
    return out;
}

std::string signed_term(size_t idx, bool neg, const std::string& body) {
    if (idx == 0) return neg ? "-" + body : body;
    return (neg ? "- " : "+ ") + body;
}

std::string magnitude_str(const Rat& mag) {
    return rat_str(mag);
}

int parse_power(const std::string& s) {
    if (s == "t") return 1;
    if (s.rfind("t^", 0) != 0) throw std::runtime_error("bad power '" + s + "'");
    std::string digits = s.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error("bad power '" + s + "'");
    return std::stoi(digits);
}

int parse_var_index(const std::string& s, int nvars) {
    if (s.size() < 2 || s[0] != 'a' ||
        s.find_first_not_of("0123456789", 1) != std::string::npos)
        throw std::runtime_error("bad variable '" + s + "'");
    int idx = std::stoi(s.substr(1));
    if (idx < 1 || idx > nvars)
        throw std::runtime_error("variable '" + s + "' out of range (nvars=" +
                                 std::to_string(nvars) + ")");
    return idx - 1;
}

}  // namespace

std::string linear_form_str(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    if (!f.is_linear_form())
        throw std::invalid_argument("linear_form_str: not a linear form");
    std::string out;
    size_t idx = 0;
    for (int v = 0; v < f.nvars(); ++v) {
        Rat c = f.coeff_of_var(v);
        if (is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        Rat mag = neg ? Rat(-c) : c;
        std::string var = "a" + std::to_string(v + 1);
        std::string body = (mag == 1) ? var : magnitude_str(mag) + "*" + var;
        if (idx) out += " ";
        out += signed_term(idx++, neg, body);
    }
    return out;
}

std::string poly_str(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    size_t idx = 0;
    const auto& terms = f.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [mono, c] = *it;
        bool neg = sgn(c) < 0;
        Rat mag = neg ? Rat(-c) : c;
        std::string vars;
        for (int v = 0; v < f.nvars(); ++v) {
            if (mono[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "a" + std::to_string(v + 1);
            if (mono[v] > 1) vars += "^" + std::to_string(mono[v]);
        }
        std::string body;
        if (vars.empty()) body = magnitude_str(mag);
        else if (mag == 1) body = vars;
        else body = magnitude_str(mag) + "*" + vars;
        if (idx) out += " ";
        out += signed_term(idx++, neg, body);
    }
    return out;
}

MultiPoly parse_linear_form(const std::string& s, int nvars) {
    MultiPoly f(nvars);
    std::string body = trim(s);
    if (body.empty()) throw std::runtime_error("empty linear form");
    if (body == "0") return f;
    for (auto& [sign, term] : split_terms(body)) {
        size_t star = term.find('*');
        Rat coeff(sign);
        std::string var = term;
        if (star != std::string::npos) {
            coeff = parse_rat(term.substr(0, star)) * sign;
            var = term.substr(star + 1);
        }
        int v = parse_var_index(var, nvars);
        f += MultiPoly::variable(v, nvars, coeff);
    }
    return f;
}

std::string tpoly_str(const TPoly& p) {
    std::string out;
    size_t idx = 0;
    for (size_t k = 0; k < p.size(); ++k) {
        if (is_zero(p[k])) continue;
        bool neg = sgn(p[k]) < 0;
        Rat mag = neg ? Rat(-p[k]) : p[k];
        std::string pw = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string body;
        if (pw.empty())
            body = magnitude_str(mag);
        else if (mag == 1)
            body = pw;
        else
            body = magnitude_str(mag) + "*" + pw;
        if (idx) out += " ";
        out += signed_term(idx++, neg, body);
    }
    return idx ? out : "0";
}

TPoly parse_tpoly(const std::string& s) {
    std::string body = trim(s);
    if (body.empty()) throw std::runtime_error("empty polynomial");
    TPoly p;
    if (body == "0") return p;
    for (auto& [sign, term] : split_terms(body)) {
        Rat coeff(sign);
        int power = 0;
        size_t star = term.find('*');
        if (star != std::string::npos) {
            coeff = parse_rat(term.substr(0, star)) * sign;
            power = parse_power(term.substr(star + 1));
        } else if (term[0] == 't') {
            power = parse_power(term);
        } else {
            coeff = parse_rat(term) * sign;
        }
        if (power >= static_cast<int>(p.size())) p.resize(power + 1, Rat(0));
        p[power] += coeff;
    }
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    return p;
}

// ------------------------------------------------------------------ files

namespace {

struct LineReader {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)
    size_t pos = 0;

    explicit LineReader(std::istream& in) {
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::string t = trim(raw);
            if (!t.empty()) lines.emplace_back(no, t);
        }
    }
    bool done() const { return pos == lines.size(); }
    const std::pair<int, std::string>& peek() const {
        if (done()) throw std::runtime_error("unexpected end of file");
        return lines[pos];
    }
    std::pair<int, std::string> next() {
        auto l = peek();
        ++pos;
        return l;
    }
};

std::vector<int> parse_header(const std::string& line, int line_no,
                              const std::string& keyword) {
    std::istringstream in(line);
    std::string kw;
    in >> kw;
    if (kw != keyword) fail(line_no, "expected '" + keyword + "' header, got '" + kw + "'");
    std::vector<int> dims(3);
    for (int& d : dims)
        if (!(in >> d) || d <= 0) fail(line_no, "header needs three positive integers");
    std::string extra;
    if (in >> extra) fail(line_no, "trailing content '" + extra + "' after header");
    return dims;
}

std::vector<std::string> split_on_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) out.push_back(trim(cur));
    return out;
}

}  // namespace

Tensor3 read_tensor(std::istream& in) {
    LineReader r(in);
    if (r.done()) throw std::runtime_error("empty tensor file");
    auto [hline, htext] = r.next();
    auto dims = parse_header(htext, hline, "tensor");
    Tensor3 t(dims[0], dims[1], dims[2]);
    std::map<std::array<int, 3>, bool> seen;
    while (!r.done()) {
        auto [no, text] = r.next();
        std::istringstream ls(text);
        int i, j, k;
        std::string val, extra;
        if (!(ls >> i >> j >> k >> val)) fail(no, "expected 'i j k value'");
        if (ls >> extra) fail(no, "trailing content '" + extra + "'");
        for (int axis = 0; axis < 3; ++axis) {
            int ix = axis == 0 ? i : axis == 1 ? j : k;
            if (ix < 1 || ix > dims[axis])
                fail(no, "index " + std::to_string(ix) + " out of range for axis " +
                             std::to_string(axis + 1));
        }
        if (seen.count({i - 1, j - 1, k - 1})) fail(no, "duplicate entry");
        seen[{i - 1, j - 1, k - 1}] = true;
        Rat v;
        try {
            v = parse_rat(val);
        } catch (const std::exception& e) {
            fail(no, e.what());
        }
        t.set(i - 1, j - 1, k - 1, v);
    }
    return t;
}

void write_tensor(std::ostream& out, const Tensor3& t) {
    out << "tensor " << t.dim(0) << " " << t.dim(1) << " " << t.dim(2) << "\n";
    for (const auto& [ix, v] : t.entries())
        out << ix[0] + 1 << " " << ix[1] + 1 << " " << ix[2] + 1 << " " << v.get_num()
            << "/" << v.get_den() << "\n";
}

SpaceOfMatrices read_space(std::istream& in) {
    LineReader r(in);
    if (r.done()) throw std::runtime_error("empty space file");
    auto [hline, htext] = r.next();
    auto dims = parse_header(htext, hline, "space");
    int nvars = dims[0], rows = dims[1], cols = dims[2];
    PolyMatrix m(rows, cols, nvars);
    if (!r.done() && r.peek().second.rfind("slice", 0) == 0) {
        std::vector<bool> seen(nvars, false);
        while (!r.done()) {
            auto [no, text] = r.next();
            std::istringstream hs(text);
            std::string kw;
            int idx;
            hs >> kw;
            if (kw != "slice" || !(hs >> idx)) fail(no, "expected 'slice i'");
            if (idx < 1 || idx > nvars) fail(no, "slice index out of range");
            if (seen[idx - 1]) fail(no, "duplicate slice " + std::to_string(idx));
            seen[idx - 1] = true;
            for (int i = 0; i < rows; ++i) {
                auto [rno, rtext] = r.next();
                std::istringstream ls(rtext);
                std::string val;
                for (int j = 0; j < cols; ++j) {
                    if (!(ls >> val)) fail(rno, "expected " + std::to_string(cols) + " entries");
                    try {
                        m.at(i, j) += MultiPoly::variable(idx - 1, nvars, parse_rat(val));
                    } catch (const std::exception& e) {
                        fail(rno, e.what());
                    }
                }
                if (ls >> val) fail(rno, "trailing content '" + val + "'");
            }
        }
        return m;
    }
    for (int i = 0; i < rows; ++i) {
        if (r.done()) throw std::runtime_error("expected " + std::to_string(rows) +
                                               " rows, got " + std::to_string(i));
        auto [no, text] = r.next();
        auto forms = split_on_commas(text);
        if (static_cast<int>(forms.size()) != cols)
            fail(no, "expected " + std::to_string(cols) + " entries, got " +
                         std::to_string(forms.size()));
        for (int j = 0; j < cols; ++j) {
            try {
                m.at(i, j) = parse_linear_form(forms[j], nvars);
            } catch (const std::exception& e) {
                fail(no, e.what());
            }
        }
    }
    if (!r.done()) fail(r.peek().first, "trailing content after last row");
    return m;
}

void write_space(std::ostream& out, const SpaceOfMatrices& e) {
    if (!e.is_space_of_linear_forms())
        throw std::invalid_argument("write_space: entries must be linear forms");
    out << "space " << e.nvars() << " " << e.rows() << " " << e.cols() << "\n";
    for (int i = 0; i < e.rows(); ++i) {
        for (int j = 0; j < e.cols(); ++j) {
            if (j) out << ", ";
            out << linear_form_str(e.at(i, j));
        }
        out << "\n";
    }
}

Decomposition read_cert(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("scale") || !j.contains("cyclic") ||
        !j.contains("terms"))
        throw std::runtime_error("certificate needs 'scale', 'cyclic' and 'terms'");
    if (!j["scale"].is_number_integer()) throw std::runtime_error("'scale' must be an integer");
    if (!j["cyclic"].is_boolean()) throw std::runtime_error("'cyclic' must be a boolean");
    if (!j["terms"].is_array() || j["terms"].empty())
        throw std::runtime_error("'terms' must be a nonempty array");
    Decomposition d;
    d.scale = j["scale"].get<long>();
    d.cyclic = j["cyclic"].get<bool>();
    size_t ua = 0, ub = 0, uc = 0;
    for (const auto& jt : j["terms"]) {
        Term t;
        for (const char* key : {"u", "v", "w"}) {
            if (!jt.contains(key) || !jt[key].is_array())
                throw std::runtime_error(std::string("term needs array '") + key + "'");
            auto& dst = key[0] == 'u' ? t.u : key[0] == 'v' ? t.v : t.w;
            for (const auto& s : jt[key]) {
                if (!s.is_string())
                    throw std::runtime_error(std::string("entries of '") + key +
                                             "' must be polynomial strings");
                dst.push_back(parse_tpoly(s.get<std::string>()));
            }
        }
        if (jt.contains("shift")) {
            if (!jt["shift"].is_number_integer())
                throw std::runtime_error("'shift' must be an integer");
            t.shift = jt["shift"].get<int>();
        }
        if (d.terms.empty()) {
            ua = t.u.size(), ub = t.v.size(), uc = t.w.size();
            if (ua == 0 || ub == 0 || uc == 0)
                throw std::runtime_error("term vectors must be nonempty");
        } else if (t.u.size() != ua || t.v.size() != ub || t.w.size() != uc) {
            throw std::runtime_error("terms disagree on vector lengths");
        }
        d.terms.push_back(std::move(t));
    }
    return d;
}

void write_cert(std::ostream& out, const Decomposition& d) {
    nlohmann::ordered_json j;
    j["scale"] = d.scale;
    j["cyclic"] = d.cyclic;
    j["terms"] = nlohmann::ordered_json::array();
    for (const Term& t : d.terms) {
        nlohmann::ordered_json jt;
        for (const char* key : {"u", "v", "w"}) {
            const auto& src = key[0] == 'u' ? t.u : key[0] == 'v' ? t.v : t.w;
            auto arr = nlohmann::ordered_json::array();
            for (const TPoly& p : src) arr.push_back(tpoly_str(p));
            jt[key] = std::move(arr);
        }
        if (t.shift != 0) jt["shift"] = t.shift;
        j["terms"].push_back(std::move(jt));
    }
    out << j.dump(1) << "\n";
}

namespace {

template <class T, class Reader>
T read_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return reader(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

template <class T, class Writer>
std::string to_string_via(const T& x, Writer writer) {
    std::ostringstream out;
    writer(out, x);
    return out.str();
}

}  // namespace

Tensor3 read_tensor_file(const std::string& path) {
    return read_file<Tensor3>(path, [](std::istream& in) { return read_tensor(in); });
}
SpaceOfMatrices read_space_file(const std::string& path) {
    return read_file<SpaceOfMatrices>(path, [](std::istream& in) { return read_space(in); });
}
Decomposition read_cert_file(const std::string& path) {
    return read_file<Decomposition>(path, [](std::istream& in) { return read_cert(in); });
}

std::string tensor_to_string(const Tensor3& t) {
    return to_string_via(t, [](std::ostream& o, const Tensor3& x) { write_tensor(o, x); });
}
std::string space_to_string(const SpaceOfMatrices& e) {
    return to_string_via(e, [](std::ostream& o, const SpaceOfMatrices& x) { write_space(o, x); });
}
std::string cert_to_string(const Decomposition& d) {
    return to_string_via(d, [](std::ostream& o, const Decomposition& x) { write_cert(o, x); });
}

}  // namespace brkit
