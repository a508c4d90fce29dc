#include "homkit/algfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "homkit/homology.hpp"

namespace homkit {

namespace {

struct Cursor {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    int col() const { return int(pos) + 1; }
    [[noreturn]] void err(const std::string& msg) const { throw ParseError(msg, line, int(pos) + 1); }

    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) err(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) err("expected a name");
        return s.substr(start, pos - start);
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            err("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }
};

std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out.push_back({n, line.substr(a, b - a + 1)});
    }
    return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

/// Path word "c*b*a" composes right to left: a acts first. Validates arrow
/// names and composability against the quiver.
Path parse_path_word(Cursor& c, const Quiver& q) {
    std::vector<std::size_t> named;  // in written (right-to-left) order
    for (;;) {
        int col = c.col();
        std::string name = c.ident();
        auto idx = q.arrow_index(name);
        if (!idx) throw ParseError("unknown arrow '" + name + "'", c.line, col);
        named.push_back(*idx);
        if (!c.peek_is('*')) break;
        c.expect('*');
    }
    Path p;
    p.arrows.assign(named.rbegin(), named.rend());
    p.source = q.arrows[p.arrows.front()].src;
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrows[p.arrows[i]].tgt != q.arrows[p.arrows[i + 1]].src)
            c.err("path word is not composable");
    return p;
}

Relation parse_relation_line(int line_no, const std::string& body, const Quiver& q, uint32_t p) {
    Cursor c{body, line_no};
    Relation rel;
    rel.line = line_no;
    bool first = true;
    while (!c.done()) {
        long long sign = 1;
        c.skip_ws();
        if (c.peek_is('+')) {
            c.expect('+');
        } else if (c.peek_is('-')) {
            c.expect('-');
            sign = -1;
        } else if (!first) {
            c.err("expected '+' or '-' between relation terms");
        }
        long long coeff = 1;
        c.skip_ws();
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            coeff = c.integer();
            if (c.peek_is('*')) c.expect('*');
        }
        Path path = parse_path_word(c, q);
        uint32_t cf = fp_from_int(sign * coeff, p);
        if (cf != 0) rel.terms.push_back({cf, std::move(path)});
        first = false;
    }
    if (rel.terms.empty()) throw ParseError("relation has no nonzero terms", line_no, 1);
    std::size_t src = rel.terms[0].path.source, tgt = path_target(q, rel.terms[0].path);
    for (const auto& t : rel.terms)
        if (t.path.source != src || path_target(q, t.path) != tgt)
            throw ParseError("relation terms are not parallel paths", line_no, 1);
    return rel;
}

/// Linear combination of basis names: "b0 + 2*b1 - b2", or "0".
std::vector<uint32_t> parse_basis_combo(int line_no, const std::string& body,
                                        const std::vector<std::string>& names, uint32_t p) {
    std::vector<uint32_t> v(names.size(), 0);
    Cursor c{body, line_no};
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '0' &&
        (c.pos + 1 >= c.s.size() || !std::isalnum(static_cast<unsigned char>(c.s[c.pos + 1])))) {
        ++c.pos;
        if (!c.done()) c.err("unexpected text after 0");
        return v;
    }
    bool first = true;
    while (!c.done()) {
        long long sign = 1;
        if (c.peek_is('+')) {
            c.expect('+');
        } else if (c.peek_is('-')) {
            c.expect('-');
            sign = -1;
        } else if (!first) {
            c.err("expected '+' or '-' between terms");
        }
        long long coeff = 1;
        c.skip_ws();
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            coeff = c.integer();
            if (c.peek_is('*')) c.expect('*');
        }
        int col = c.col();
        std::string name = c.ident();
        std::size_t idx = SIZE_MAX;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) idx = i;
        if (idx == SIZE_MAX) throw ParseError("unknown basis name '" + name + "'", line_no, col);
        v[idx] = fp_add(v[idx], fp_from_int(sign * coeff, p), p);
        first = false;
    }
    return v;
}

}  // namespace

AlgebraFileContents parse_algebra_file(const std::string& text) {
    auto lines = logical_lines(text);
    std::optional<uint32_t> field_p;
    std::optional<std::size_t> nilpotency;
    bool saw_quiver = false, saw_constants = false;
    Quiver quiver;
    std::vector<std::pair<int, std::string>> relation_lines;
    ConstantsSpec cs;
    std::vector<std::pair<int, std::string>> mul_lines, unit_lines, idem_lines;

    enum class Mode { top, quiver, relations, constants };
    Mode mode = Mode::top;

    for (auto& [no, body] : lines) {
        if (starts_with(body, "field")) {
            Cursor c{body, no};
            c.ident();  // field
            if (c.ident() != "p") c.err("expected 'p'");
            c.expect('=');
            long long p = c.integer();
            if (p < 2) c.err("field characteristic must be at least 2");
            field_p = uint32_t(p);
            mode = Mode::top;
            continue;
        }
        if (body == "quiver") {
            saw_quiver = true;
            mode = Mode::quiver;
            continue;
        }
        if (body == "relations") {
            if (!saw_quiver) throw ParseError("relations before the quiver block", no, 1);
            mode = Mode::relations;
            continue;
        }
        if (body == "constants") {
            saw_constants = true;
            mode = Mode::constants;
            continue;
        }
        if (starts_with(body, "nilpotency")) {
            Cursor c{body, no};
            c.ident();
            if (c.ident() != "L") c.err("expected 'L'");
            c.expect('=');
            long long L = c.integer();
            if (L < 1) c.err("nilpotency degree must be positive");
            nilpotency = std::size_t(L);
            mode = Mode::top;
            continue;
        }
        switch (mode) {
            case Mode::quiver: {
                if (starts_with(body, "vertices:")) {
                    Cursor c{body, no};
                    c.ident();
                    c.expect(':');
                    while (!c.done()) quiver.vertices.push_back(c.ident());
                } else if (starts_with(body, "arrow")) {
                    Cursor c{body, no};
                    c.ident();
                    std::string name = c.ident();
                    c.expect(':');
                    int scol = c.col();
                    std::string src = c.ident();
                    c.expect('-');
                    c.expect('>');
                    int tcol = c.col();
                    std::string tgt = c.ident();
                    auto si = quiver.vertex_index(src);
                    if (!si) throw ParseError("unknown vertex '" + src + "'", no, scol);
                    auto ti = quiver.vertex_index(tgt);
                    if (!ti) throw ParseError("unknown vertex '" + tgt + "'", no, tcol);
                    quiver.arrows.push_back({name, *si, *ti});
                } else {
                    throw ParseError("expected 'vertices:' or 'arrow' in the quiver block", no, 1);
                }
                break;
            }
            case Mode::relations:
                relation_lines.push_back({no, body});
                break;
            case Mode::constants: {
                if (starts_with(body, "dim")) {
                    Cursor c{body, no};
                    c.ident();
                    c.expect('=');
                    cs.dim = std::size_t(c.integer());
                } else if (starts_with(body, "basis:")) {
                    Cursor c{body, no};
                    c.ident();
                    c.expect(':');
                    while (!c.done()) cs.basis_names.push_back(c.ident());
                } else if (starts_with(body, "unit")) {
                    unit_lines.push_back({no, body});
                } else if (starts_with(body, "idempotent")) {
                    idem_lines.push_back({no, body});
                } else if (starts_with(body, "mul")) {
                    mul_lines.push_back({no, body});
                } else {
                    throw ParseError("unknown directive in the constants block", no, 1);
                }
                break;
            }
            case Mode::top:
                throw ParseError("unknown directive '" + body + "'", no, 1);
        }
    }

    if (!field_p) throw ParseError("missing 'field p = <prime>'", 1, 1);
    if (!is_prime_u32(*field_p)) throw ParseError("field characteristic is not prime", 1, 1);
    if (saw_quiver == saw_constants)
        throw ParseError("exactly one of a quiver or a constants block is required", 1, 1);

    AlgebraFileContents out;
    if (saw_quiver) {
        if (!nilpotency) throw ParseError("missing 'nilpotency L = <int>'", 1, 1);
        Presentation pr;
        pr.p = *field_p;
        pr.nilpotency = *nilpotency;
        pr.quiver = quiver;
        for (auto& [no, body] : relation_lines)
            pr.relations.push_back(parse_relation_line(no, body, quiver, pr.p));
        out.presentation = std::move(pr);
        return out;
    }

    cs.p = *field_p;
    if (cs.dim == 0) throw ParseError("constants block needs 'dim = <n>'", 1, 1);
    if (cs.basis_names.empty())
        for (std::size_t i = 0; i < cs.dim; ++i) cs.basis_names.push_back("b" + std::to_string(i));
    if (cs.basis_names.size() != cs.dim)
        throw ParseError("basis name count differs from dim", 1, 1);
    cs.mult.assign(cs.dim * cs.dim, std::vector<uint32_t>(cs.dim, 0));
    for (auto& [no, body] : mul_lines) {
        Cursor c{body, no};
        c.ident();  // mul
        int col1 = c.col();
        std::string n1 = c.ident();
        int col2 = c.col();
        std::string n2 = c.ident();
        c.expect('=');
        std::size_t i = SIZE_MAX, j = SIZE_MAX;
        for (std::size_t t = 0; t < cs.dim; ++t) {
            if (cs.basis_names[t] == n1) i = t;
            if (cs.basis_names[t] == n2) j = t;
        }
        if (i == SIZE_MAX) throw ParseError("unknown basis name '" + n1 + "'", no, col1);
        if (j == SIZE_MAX) throw ParseError("unknown basis name '" + n2 + "'", no, col2);
        cs.mult[i * cs.dim + j] =
            parse_basis_combo(no, body.substr(c.pos), cs.basis_names, cs.p);
    }
    if (unit_lines.empty()) throw ParseError("constants block needs 'unit = <combo>'", 1, 1);
    {
        auto& [no, body] = unit_lines.back();
        Cursor c{body, no};
        c.ident();
        c.expect('=');
        cs.unit = parse_basis_combo(no, body.substr(c.pos), cs.basis_names, cs.p);
    }
    for (auto& [no, body] : idem_lines) {
        Cursor c{body, no};
        c.ident();
        c.expect('=');
        cs.idempotents.push_back(parse_basis_combo(no, body.substr(c.pos), cs.basis_names, cs.p));
    }
    if (cs.idempotents.empty())
        throw ParseError("constants block needs at least one 'idempotent = <combo>'", 1, 1);
    out.constants = std::move(cs);
    return out;
}

AlgebraPtr algebra_from_text(const std::string& text) {
    AlgebraFileContents c = parse_algebra_file(text);
    return c.presentation ? build_algebra(*c.presentation) : build_from_constants(*c.constants);
}

AlgebraPtr algebra_from_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return algebra_from_text(ss.str());
}

namespace {

struct ExprCursor {
    Cursor c;
    const AlgebraPtr& alg;

    Module parse_expr() {
        std::vector<Module> parts{parse_term()};
        while (c.peek_is('+')) {
            c.expect('+');
            parts.push_back(parse_term());
        }
        if (parts.size() == 1) return parts[0];
        return direct_sum(parts).mod;
    }

    Module parse_term() {
        c.skip_ws();
        int col = c.col();
        std::string head = c.ident();
        if (head == "regular") return regular_module(alg_here());
        if (head == "zero") return zero_module(alg_here());
        if (head == "D") {
            c.expect('(');
            Module inner = parse_expr();
            c.expect(')');
            return duality_D(inner);
        }
        if (head == "syzygy") {
            c.expect('(');
            long long k = c.integer();
            if (k < 1) c.err("syzygy index must be >= 1");
            c.expect(',');
            Module inner = parse_expr();
            c.expect(')');
            return syzygy(inner, std::size_t(k));
        }
        if (head.size() >= 2 && (head[0] == 'S' || head[0] == 'P' || head[0] == 'I')) {
            bool digits = true;
            for (std::size_t i = 1; i < head.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(head[i]))) digits = false;
            if (digits) {
                std::size_t idx = std::stoull(head.substr(1));
                if (idx < 1 || idx > alg_here()->idempotents.size())
                    throw ParseError("index out of range in '" + head + "'", c.line, col);
                auto f = fundamental_modules(alg_here());
                if (head[0] == 'S') return f.simples[idx - 1];
                if (head[0] == 'P') return f.projectives[idx - 1];
                return f.injectives[idx - 1];
            }
        }
        throw ParseError("unknown module term '" + head + "'", c.line, col);
    }

    // D(...) changes sides internally; named terms always refer to the
    // algebra the expression was evaluated against
    const AlgebraPtr& alg_here() { return alg; }
};

}  // namespace

Module evaluate_module_expr(const AlgebraPtr& a, const std::string& expr) {
    ExprCursor ec{Cursor{expr, 1}, a};
    Module m = ec.parse_expr();
    if (!ec.c.done()) ec.c.err("unexpected trailing text in module expression");
    return m;
}

Module parse_module_file(const AlgebraPtr& a, const std::string& text) {
    auto lines = logical_lines(text);
    std::size_t dim = SIZE_MAX;
    std::vector<Mat> action(a->dim);
    std::vector<bool> seen(a->dim, false);
    bool in_module = false;
    for (auto& [no, body] : lines) {
        if (body == "module") {
            in_module = true;
            continue;
        }
        if (!in_module) throw ParseError("module file must start with 'module'", no, 1);
        if (starts_with(body, "dim")) {
            Cursor c{body, no};
            c.ident();
            c.expect('=');
            dim = std::size_t(c.integer());
            continue;
        }
        if (starts_with(body, "action")) {
            if (dim == SIZE_MAX) throw ParseError("'dim = <n>' must precede actions", no, 1);
            Cursor c{body, no};
            c.ident();
            int col = c.col();
            std::string name = c.ident();
            std::size_t bi = SIZE_MAX;
            for (std::size_t i = 0; i < a->dim; ++i)
                if (a->basis_names[i] == name) bi = i;
            if (bi == SIZE_MAX)
                throw ParseError("unknown algebra basis name '" + name + "'", no, col);
            c.expect('=');
            Mat m(dim, dim, a->p);
            c.expect('[');
            for (std::size_t r = 0; r < dim; ++r) {
                c.expect('[');
                for (std::size_t j = 0; j < dim; ++j) {
                    m.at(r, j) = fp_from_int(c.integer(), a->p);
                    if (j + 1 < dim) c.expect(',');
                }
                c.expect(']');
                if (r + 1 < dim) c.expect(',');
            }
            c.expect(']');
            action[bi] = std::move(m);
            seen[bi] = true;
            continue;
        }
        throw ParseError("unknown directive in module file", no, 1);
    }
    if (dim == SIZE_MAX) throw ParseError("module file missing 'dim'", 1, 1);
    for (std::size_t i = 0; i < a->dim; ++i)
        if (!seen[i])
            throw ParseError("missing action for basis element '" + a->basis_names[i] + "'", 1, 1);
    return module_from_action(a, std::move(action), /*verify=*/true);
}

}  // namespace homkit
