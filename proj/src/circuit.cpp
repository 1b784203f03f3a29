// SPDX-License-Identifier: Apache-2.0

#include "pgr/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace pgr {

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

CircuitDag::CircuitDag(std::size_t num_qudits, std::vector<Gate> gates)
    : num_qudits_(num_qudits), gates_(std::move(gates)) {
    preds_.resize(gates_.size());
    succs_.resize(gates_.size());
    // last gate that touched each qudit
    std::vector<GateId> last(num_qudits_, kNoQudit);
    for (GateId id = 0; id < gates_.size(); ++id) {
        gates_[id].id = id;
        for (Qudit q : gates_[id].operands) {
            if (q >= num_qudits_) throw ConfigError("gate operand out of range");
            if (last[q] != kNoQudit) {
                GateId p = last[q];
                if (preds_[id].empty() || preds_[id].back() != p) {
                    if (std::find(preds_[id].begin(), preds_[id].end(), p) == preds_[id].end()) {
                        preds_[id].push_back(p);
                        succs_[p].push_back(id);
                    }
                }
            }
            last[q] = id;
        }
        std::sort(preds_[id].begin(), preds_[id].end());
    }
}

CircuitDag CircuitDag::reversed() const {
    std::vector<Gate> rev(gates_.rbegin(), gates_.rend());
    return CircuitDag(num_qudits_, std::move(rev));
}

// ---------------------------------------------------------------------------
// QASM subset parser
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char get() {
        char c = text[pos++];
        if (c == '\n') ++line;
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (!eof() && peek() != '\n') get();
            } else {
                break;
            }
        }
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_ident(Cursor& c) {
    std::string s;
    while (!c.eof() && ident_char(c.peek())) s.push_back(c.get());
    return s;
}

void expect(Cursor& c, char ch) {
    c.skip_ws();
    if (c.eof() || c.peek() != ch)
        throw ParseError(std::string("expected '") + ch + "'", c.line);
    c.get();
}

// Small expression grammar for gate parameters: numbers, pi, + - * / and
// parentheses. Qiskit emits forms like pi/4 and 3*pi/8.
double parse_expr(Cursor& c);

double parse_primary(Cursor& c) {
    c.skip_ws();
    if (c.eof()) throw ParseError("unexpected end of parameter expression", c.line);
    char ch = c.peek();
    if (ch == '(') {
        c.get();
        double v = parse_expr(c);
        expect(c, ')');
        return v;
    }
    if (ch == '-') {
        c.get();
        return -parse_primary(c);
    }
    if (ch == '+') {
        c.get();
        return parse_primary(c);
    }
    if (ident_start(ch)) {
        std::string name = read_ident(c);
        if (name == "pi") return std::numbers::pi;
        throw ParseError("unknown identifier '" + name + "' in parameter", c.line);
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
        std::size_t start = c.pos;
        while (!c.eof()) {
            char d = c.peek();
            if (std::isdigit(static_cast<unsigned char>(d)) || d == '.' || d == 'e' || d == 'E') {
                c.get();
            } else if ((d == '+' || d == '-') && c.pos > start &&
                       (c.text[c.pos - 1] == 'e' || c.text[c.pos - 1] == 'E')) {
                c.get();
            } else {
                break;
            }
        }
        return std::strtod(c.text.substr(start, c.pos - start).c_str(), nullptr);
    }
    throw ParseError("malformed parameter expression", c.line);
}

double parse_term(Cursor& c) {
    double v = parse_primary(c);
    while (true) {
        c.skip_ws();
        if (c.eof()) break;
        char ch = c.peek();
        if (ch == '*') {
            c.get();
            v *= parse_primary(c);
        } else if (ch == '/') {
            c.get();
            v /= parse_primary(c);
        } else {
            break;
        }
    }
    return v;
}

double parse_expr(Cursor& c) {
    double v = parse_term(c);
    while (true) {
        c.skip_ws();
        if (c.eof()) break;
        char ch = c.peek();
        if (ch == '+') {
            c.get();
            v += parse_term(c);
        } else if (ch == '-') {
            c.get();
            v -= parse_term(c);
        } else {
            break;
        }
    }
    return v;
}

struct Reg {
    std::size_t base = 0;
    std::size_t size = 0;
};

// Known gate arities beyond the 1- and 2-operand opaque default.
int known_arity(const std::string& name) {
    static const std::map<std::string, int> table = {
        {"ccx", 3}, {"cswap", 3}, {"ccz", 3},
    };
    auto it = table.find(name);
    return it == table.end() ? -1 : it->second;
}

}  // namespace

CircuitDag parse_qasm(const std::string& text) {
    Cursor c{text};
    std::map<std::string, Reg> qregs;
    std::map<std::string, std::size_t> declared_arity;
    std::size_t total_qudits = 0;
    std::vector<Gate> gates;

    auto parse_operand = [&](bool allow_broadcast) -> std::pair<std::string, long> {
        c.skip_ws();
        if (c.eof() || !ident_start(c.peek()))
            throw ParseError("expected register operand", c.line);
        std::string name = read_ident(c);
        if (!qregs.count(name)) throw ParseError("unknown register '" + name + "'", c.line);
        c.skip_ws();
        if (!c.eof() && c.peek() == '[') {
            c.get();
            c.skip_ws();
            std::size_t start = c.pos;
            while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) c.get();
            if (c.pos == start) throw ParseError("expected index", c.line);
            long idx = std::strtol(c.text.substr(start, c.pos - start).c_str(), nullptr, 10);
            expect(c, ']');
            if (idx < 0 || static_cast<std::size_t>(idx) >= qregs[name].size)
                throw ParseError("operand index out of register bounds", c.line);
            return {name, idx};
        }
        if (!allow_broadcast) throw ParseError("expected '[' after register name", c.line);
        return {name, -1};  // whole-register broadcast
    };

    auto skip_to_semicolon = [&]() {
        while (!c.eof() && c.peek() != ';') c.get();
        if (!c.eof()) c.get();
    };

    while (true) {
        c.skip_ws();
        if (c.eof()) break;
        std::size_t stmt_line = c.line;
        if (!ident_start(c.peek()))
            throw ParseError("unexpected character '" + std::string(1, c.peek()) + "'", c.line);
        std::string word = read_ident(c);

        if (word == "OPENQASM") {
            skip_to_semicolon();
        } else if (word == "include") {
            skip_to_semicolon();
        } else if (word == "qreg" || word == "creg") {
            c.skip_ws();
            std::string name = read_ident(c);
            if (name.empty()) throw ParseError("expected register name", stmt_line);
            expect(c, '[');
            c.skip_ws();
            std::size_t start = c.pos;
            while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) c.get();
            long n = std::strtol(c.text.substr(start, c.pos - start).c_str(), nullptr, 10);
            if (n <= 0) throw ParseError("register size must be positive", stmt_line);
            expect(c, ']');
            expect(c, ';');
            if (word == "qreg") {
                if (qregs.count(name)) throw ParseError("duplicate register '" + name + "'", stmt_line);
                qregs[name] = {total_qudits, static_cast<std::size_t>(n)};
                total_qudits += static_cast<std::size_t>(n);
            }
        } else if (word == "gate" || word == "opaque") {
            // Declaration: remember the arity, skip any body.
            c.skip_ws();
            std::string name = read_ident(c);
            c.skip_ws();
            if (!c.eof() && c.peek() == '(') {
                int depth = 0;
                do {
                    char ch = c.get();
                    if (ch == '(') ++depth;
                    if (ch == ')') --depth;
                } while (!c.eof() && depth > 0);
            }
            std::size_t arity = 0;
            while (true) {
                c.skip_ws();
                if (c.eof()) throw ParseError("unterminated gate declaration", stmt_line);
                if (c.peek() == '{' || c.peek() == ';') break;
                if (c.peek() == ',') {
                    c.get();
                    continue;
                }
                read_ident(c);
                ++arity;
            }
            declared_arity[name] = arity;
            if (c.peek() == ';') {
                c.get();
            } else {
                int depth = 0;
                do {
                    char ch = c.get();
                    if (ch == '{') ++depth;
                    if (ch == '}') --depth;
                } while (!c.eof() && depth > 0);
            }
        } else if (word == "barrier") {
            skip_to_semicolon();  // parsed and discarded
        } else if (word == "measure" || word == "reset") {
            if (word == "reset") throw ParseError("unsupported statement 'reset'", stmt_line);
            skip_to_semicolon();  // measurements are ignored for routing
        } else if (word == "if") {
            throw ParseError("unsupported statement 'if'", stmt_line);
        } else {
            // Gate application.
            Gate g;
            g.kind = word;
            c.skip_ws();
            if (!c.eof() && c.peek() == '(') {
                c.get();
                c.skip_ws();
                if (c.peek() != ')') {
                    g.params.push_back(parse_expr(c));
                    while (true) {
                        c.skip_ws();
                        if (c.peek() == ',') {
                            c.get();
                            g.params.push_back(parse_expr(c));
                        } else {
                            break;
                        }
                    }
                }
                expect(c, ')');
            }
            std::vector<std::pair<std::string, long>> ops;
            ops.push_back(parse_operand(true));
            while (true) {
                c.skip_ws();
                if (!c.eof() && c.peek() == ',') {
                    c.get();
                    ops.push_back(parse_operand(false));
                } else {
                    break;
                }
            }
            expect(c, ';');

            if (ops.size() == 1 && ops[0].second < 0) {
                // single-qudit broadcast over a whole register
                const Reg& r = qregs[ops[0].first];
                for (std::size_t i = 0; i < r.size; ++i) {
                    Gate gi = g;
                    gi.operands = {static_cast<Qudit>(r.base + i)};
                    gates.push_back(std::move(gi));
                }
                continue;
            }
            for (auto& [name, idx] : ops) {
                if (idx < 0) throw ParseError("broadcast only supported for single-operand gates", stmt_line);
                g.operands.push_back(static_cast<Qudit>(qregs[name].base + idx));
            }
            std::size_t n = g.operands.size();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (g.operands[i] == g.operands[j])
                        throw ParseError("duplicate operand in gate '" + g.kind + "'", stmt_line);
            if (n > 2) {
                int ka = known_arity(g.kind);
                auto it = declared_arity.find(g.kind);
                bool declared_ok = it != declared_arity.end() && it->second == n;
                if (ka != static_cast<int>(n) && !declared_ok)
                    throw ParseError("unsupported statement: unknown gate '" + g.kind + "' with " +
                                         std::to_string(n) + " operands",
                                     stmt_line);
            }
            gates.push_back(std::move(g));
        }
    }
    return CircuitDag(total_qudits, std::move(gates));
}

std::string to_qasm(const CircuitDag& dag) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << dag.num_qudits() << "];\n";
    for (const Gate& g : dag.gates()) {
        out << g.kind;
        if (!g.params.empty()) {
            out << '(';
            for (std::size_t i = 0; i < g.params.size(); ++i) {
                if (i) out << ',';
                out << format_double(g.params[i]);
            }
            out << ')';
        }
        out << ' ';
        for (std::size_t i = 0; i < g.operands.size(); ++i) {
            if (i) out << ',';
            out << "q[" << g.operands[i] << ']';
        }
        out << ";\n";
    }
    return out.str();
}

std::vector<GateId> front_layer(const CircuitDag& dag, const std::set<GateId>& executed) {
    for (GateId id : executed) {
        if (id >= dag.num_gates()) throw ConfigError("executed set contains unknown gate id");
        for (GateId p : dag.preds(id))
            if (!executed.count(p)) throw ConfigError("executed set is not downward-closed");
    }
    std::vector<GateId> front;
    for (GateId id = 0; id < dag.num_gates(); ++id) {
        if (executed.count(id)) continue;
        bool ready = true;
        for (GateId p : dag.preds(id))
            if (!executed.count(p)) {
                ready = false;
                break;
            }
        if (ready) front.push_back(id);
    }
    return front;
}

std::vector<GateId> lookahead_set(const CircuitDag& dag, const std::set<GateId>& executed,
                                  const std::vector<GateId>& front, std::size_t size) {
    if (size == 0) return {};
    // BFS over successor edges from the front layer; depth = fewest hops.
    std::unordered_map<GateId, std::size_t> depth;
    std::queue<GateId> queue;
    for (GateId id : front) {
        depth[id] = 0;
        queue.push(id);
    }
    std::vector<std::pair<std::size_t, GateId>> found;
    while (!queue.empty()) {
        GateId id = queue.front();
        queue.pop();
        for (GateId s : dag.succs(id)) {
            if (executed.count(s) || depth.count(s)) continue;
            depth[s] = depth[id] + 1;
            found.emplace_back(depth[s], s);
            queue.push(s);
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<GateId> result;
    for (auto& [d, id] : found) {
        if (result.size() >= size) break;
        result.push_back(id);
    }
    return result;
}

}  // namespace pgr
