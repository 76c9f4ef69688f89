#include "ptawit/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ptawit {

std::string ParseError::str() const {
    std::ostringstream out;
    out << (syntax ? "syntax" : "validation") << " error at " << line << ":" << col
        << ": " << message;
    return out.str();
}

namespace {

struct Token {
    enum Kind { Ident, Int, String, Punct, End } kind;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                t.text += advance();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            t.kind = Token::Int;
            if (c == '-') t.text += advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                t.text += advance();
            t.value = std::stoll(t.text);
            return t;
        }
        if (c == '"') {
            t.kind = Token::String;
            advance();
            while (pos_ < text_.size() && text_[pos_] != '"') t.text += advance();
            if (pos_ >= text_.size()) {
                t.kind = Token::Punct;
                t.text = "<unterminated string>";
                return t;
            }
            advance();
            return t;
        }
        t.kind = Token::Punct;
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            t.text = "->";
            advance();
            advance();
            return t;
        }
        t.text = std::string(1, advance());
        return t;
    }

private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ── Constraint strings ──────────────────────────────────────────────────────

std::optional<ConstraintAtom> parse_atom(Lexer& lex, Token& tok,
                                         const std::vector<std::string>& clocks,
                                         std::string* error) {
    auto clock_index = [&](const Token& t) -> int {
        if (t.kind == Token::Int && t.value == 0) return 0;
        if (t.kind == Token::Ident) {
            for (std::size_t i = 0; i < clocks.size(); ++i)
                if (clocks[i] == t.text) return static_cast<int>(i) + 1;
        }
        return -1;
    };
    ConstraintAtom atom{0, 0, CmpOp::Le, 0};
    atom.left = clock_index(tok);
    if (atom.left < 0) {
        if (error) *error = "unknown clock '" + tok.text + "'";
        return std::nullopt;
    }
    tok = lex.next();
    if (tok.kind == Token::Punct && tok.text == "-") {
        tok = lex.next();
        atom.right = clock_index(tok);
        if (atom.right < 0) {
            if (error) *error = "unknown clock '" + tok.text + "'";
            return std::nullopt;
        }
        tok = lex.next();
    }
    if (tok.kind != Token::Punct || (tok.text != "<" && tok.text != ">")) {
        if (error) *error = "expected comparison operator";
        return std::nullopt;
    }
    bool less = tok.text == "<";
    tok = lex.next();
    bool eq = tok.kind == Token::Punct && tok.text == "=";
    if (eq) tok = lex.next();
    atom.op = less ? (eq ? CmpOp::Le : CmpOp::Lt) : (eq ? CmpOp::Ge : CmpOp::Gt);
    if (tok.kind != Token::Int) {
        if (error) *error = "expected integer bound";
        return std::nullopt;
    }
    atom.value = tok.value;
    tok = lex.next();
    return atom;
}

} // namespace

std::optional<ClockConstraint> parse_constraint(const std::string& text,
                                                const std::vector<std::string>& clocks,
                                                std::string* error) {
    Lexer lex(text);
    Token tok = lex.next();
    int n = static_cast<int>(clocks.size());
    if (tok.kind == Token::Ident && tok.text == "true") {
        if (lex.next().kind != Token::End) {
            if (error) *error = "trailing input after 'true'";
            return std::nullopt;
        }
        return ClockConstraint::top(n);
    }
    if (tok.kind == Token::Ident && tok.text == "false") {
        if (lex.next().kind != Token::End) {
            if (error) *error = "trailing input after 'false'";
            return std::nullopt;
        }
        return ClockConstraint::bottom(n);
    }
    std::vector<ConstraintAtom> atoms;
    for (;;) {
        auto atom = parse_atom(lex, tok, clocks, error);
        if (!atom) return std::nullopt;
        atoms.push_back(*atom);
        if (tok.kind == Token::End) break;
        if (tok.kind == Token::Punct && tok.text == "&") {
            tok = lex.next();
            continue;
        }
        if (error) *error = "expected '&' or end of constraint";
        return std::nullopt;
    }
    return ClockConstraint::from_atoms(n, std::move(atoms));
}

namespace {

struct PendingTransition {
    std::string source;
    std::string guard_text;
    int guard_line, guard_col;
    std::string action;
    struct Entry {
        Rational prob;
        std::vector<std::string> resets;
        std::string target;
        int line, col;
    };
    std::vector<Entry> entries;
    int line, col;
};

struct PendingLocation {
    std::string name;
    std::string inv_text;
    int inv_line, inv_col;
    bool init = false, goal = false, fail = false;
    int line, col;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { tok_ = lex_.next(); }

    ParseResult run() {
        while (tok_.kind != Token::End) {
            if (!statement()) return result_; // single syntax error stops the parse
        }
        validate();
        return result_;
    }

private:
    Lexer lex_;
    Token tok_;
    ParseResult result_;

    std::vector<std::string> clocks_;
    std::vector<std::string> declared_actions_;
    std::optional<std::int64_t> bound_;
    std::vector<PendingLocation> locs_;
    std::vector<PendingTransition> trans_;

    void syntax_error(const std::string& msg) {
        result_.errors.push_back(ParseError{tok_.line, tok_.col, true, msg});
    }
    void validation_error(int line, int col, const std::string& msg) {
        result_.errors.push_back(ParseError{line, col, false, msg});
    }

    bool expect_punct(const std::string& p) {
        if (tok_.kind == Token::Punct && tok_.text == p) {
            tok_ = lex_.next();
            return true;
        }
        syntax_error("expected '" + p + "'");
        return false;
    }
    bool expect_keyword(const std::string& kw) {
        if (tok_.kind == Token::Ident && tok_.text == kw) {
            tok_ = lex_.next();
            return true;
        }
        syntax_error("expected '" + kw + "'");
        return false;
    }
    std::optional<std::string> expect_ident() {
        if (tok_.kind == Token::Ident) {
            std::string s = tok_.text;
            tok_ = lex_.next();
            return s;
        }
        syntax_error("expected identifier");
        return std::nullopt;
    }

    bool statement() {
        if (tok_.kind != Token::Ident) {
            syntax_error("expected statement keyword");
            return false;
        }
        if (tok_.text == "clocks") return clocks_stmt();
        if (tok_.text == "actions") return actions_stmt();
        if (tok_.text == "bound") return bound_stmt();
        if (tok_.text == "loc") return loc_stmt();
        if (tok_.text == "trans") return trans_stmt();
        syntax_error("unknown statement '" + tok_.text + "'");
        return false;
    }

    static bool statement_keyword(const std::string& s) {
        return s == "clocks" || s == "actions" || s == "bound" || s == "loc" ||
               s == "trans";
    }

    bool clocks_stmt() {
        tok_ = lex_.next();
        while (tok_.kind == Token::Ident && !statement_keyword(tok_.text)) {
            clocks_.push_back(tok_.text);
            tok_ = lex_.next();
        }
        return expect_punct(";");
    }

    bool actions_stmt() {
        tok_ = lex_.next();
        while (tok_.kind == Token::Ident && !statement_keyword(tok_.text)) {
            declared_actions_.push_back(tok_.text);
            tok_ = lex_.next();
        }
        return expect_punct(";");
    }

    bool bound_stmt() {
        tok_ = lex_.next();
        if (tok_.kind != Token::Int) {
            syntax_error("expected integer bound");
            return false;
        }
        bound_ = tok_.value;
        tok_ = lex_.next();
        return expect_punct(";");
    }

    bool loc_stmt() {
        PendingLocation loc;
        loc.line = tok_.line;
        loc.col = tok_.col;
        tok_ = lex_.next();
        auto name = expect_ident();
        if (!name) return false;
        loc.name = *name;
        if (!expect_keyword("inv")) return false;
        if (tok_.kind != Token::String) {
            syntax_error("expected quoted invariant");
            return false;
        }
        loc.inv_text = tok_.text;
        loc.inv_line = tok_.line;
        loc.inv_col = tok_.col;
        tok_ = lex_.next();
        while (tok_.kind == Token::Ident) {
            if (tok_.text == "init")
                loc.init = true;
            else if (tok_.text == "goal")
                loc.goal = true;
            else if (tok_.text == "fail")
                loc.fail = true;
            else {
                syntax_error("unknown location marker '" + tok_.text + "'");
                return false;
            }
            tok_ = lex_.next();
        }
        locs_.push_back(std::move(loc));
        return expect_punct(";");
    }

    bool trans_stmt() {
        PendingTransition tr;
        tr.line = tok_.line;
        tr.col = tok_.col;
        tok_ = lex_.next();
        auto source = expect_ident();
        if (!source) return false;
        tr.source = *source;
        if (!expect_keyword("guard")) return false;
        if (tok_.kind != Token::String) {
            syntax_error("expected quoted guard");
            return false;
        }
        tr.guard_text = tok_.text;
        tr.guard_line = tok_.line;
        tr.guard_col = tok_.col;
        tok_ = lex_.next();
        if (!expect_keyword("act")) return false;
        auto action = expect_ident();
        if (!action) return false;
        tr.action = *action;
        if (!expect_punct("{")) return false;
        while (!(tok_.kind == Token::Punct && tok_.text == "}")) {
            PendingTransition::Entry entry;
            entry.line = tok_.line;
            entry.col = tok_.col;
            if (tok_.kind != Token::Int) {
                syntax_error("expected probability");
                return false;
            }
            std::int64_t num = tok_.value;
            std::int64_t den = 1;
            tok_ = lex_.next();
            if (tok_.kind == Token::Punct && tok_.text == "/") {
                tok_ = lex_.next();
                if (tok_.kind != Token::Int) {
                    syntax_error("expected denominator");
                    return false;
                }
                den = tok_.value;
                tok_ = lex_.next();
            }
            if (den <= 0) {
                validation_error(entry.line, entry.col, "probability denominator must be positive");
                den = 1;
            }
            entry.prob = Rational(num, den);
            if (!expect_punct("->")) return false;
            if (tok_.kind == Token::Ident && tok_.text == "reset") {
                tok_ = lex_.next();
                if (!expect_punct("{")) return false;
                while (tok_.kind == Token::Ident) {
                    entry.resets.push_back(tok_.text);
                    tok_ = lex_.next();
                    if (tok_.kind == Token::Punct && tok_.text == ",") tok_ = lex_.next();
                }
                if (!expect_punct("}")) return false;
            }
            auto target = expect_ident();
            if (!target) return false;
            entry.target = *target;
            if (!expect_punct(";")) return false;
            tr.entries.push_back(std::move(entry));
        }
        tok_ = lex_.next(); // consume '}'
        trans_.push_back(std::move(tr));
        return expect_punct(";");
    }

    void validate() {
        if (!result_.errors.empty()) return;
        Pta pta;
        pta.clocks = clocks_;
        pta.declared_bound = bound_;

        std::set<std::string> seen;
        for (const auto& c : clocks_)
            if (!seen.insert(c).second)
                validation_error(1, 1, "duplicate clock '" + c + "'");

        // locations
        std::map<std::string, int> loc_index;
        for (const auto& l : locs_) {
            if (loc_index.count(l.name)) {
                validation_error(l.line, l.col, "duplicate location '" + l.name + "'");
                continue;
            }
            std::string err;
            auto inv = parse_constraint(l.inv_text, clocks_, &err);
            if (!inv) {
                validation_error(l.inv_line, l.inv_col, "invariant: " + err);
                continue;
            }
            loc_index[l.name] = static_cast<int>(pta.locations.size());
            pta.locations.push_back(Location{l.name, *inv, {}});
            int idx = loc_index[l.name];
            if (l.init) {
                if (pta.initial >= 0)
                    validation_error(l.line, l.col, "multiple init locations");
                pta.initial = idx;
            }
            if (l.goal) {
                if (pta.goal >= 0) validation_error(l.line, l.col, "multiple goal locations");
                pta.goal = idx;
            }
            if (l.fail) {
                if (pta.fail >= 0) validation_error(l.line, l.col, "multiple fail locations");
                pta.fail = idx;
            }
        }
        if (pta.initial < 0) validation_error(1, 1, "no init location declared");
        if (pta.goal < 0) validation_error(1, 1, "no goal location declared");
        if (pta.fail < 0) validation_error(1, 1, "no fail location declared");
        if (pta.goal >= 0 && pta.goal == pta.fail)
            validation_error(1, 1, "goal and fail must be distinct");
        if (!result_.errors.empty()) return;

        // actions: declared plus used, declaration order first
        std::map<std::string, int> action_index;
        for (const auto& a : declared_actions_)
            if (!action_index.count(a)) {
                action_index[a] = static_cast<int>(pta.actions.size());
                pta.actions.push_back(a);
            }
        for (const auto& t : trans_)
            if (!action_index.count(t.action)) {
                action_index[t.action] = static_cast<int>(pta.actions.size());
                pta.actions.push_back(t.action);
            }

        // transitions
        for (const auto& t : trans_) {
            auto src = loc_index.find(t.source);
            if (src == loc_index.end()) {
                validation_error(t.line, t.col, "unknown source location '" + t.source + "'");
                continue;
            }
            std::string err;
            auto guard = parse_constraint(t.guard_text, clocks_, &err);
            if (!guard) {
                validation_error(t.guard_line, t.guard_col, "guard: " + err);
                continue;
            }
            Transition tr;
            tr.guard = *guard;
            tr.action = action_index[t.action];
            Rational sum(0);
            // merge duplicate (resets, target) pairs
            std::map<std::pair<std::vector<int>, int>, Rational> dist;
            bool entry_ok = true;
            for (const auto& e : t.entries) {
                auto tgt = loc_index.find(e.target);
                if (tgt == loc_index.end()) {
                    validation_error(e.line, e.col, "unknown target location '" + e.target + "'");
                    entry_ok = false;
                    continue;
                }
                if (e.prob < 0) {
                    validation_error(e.line, e.col, "negative probability");
                    entry_ok = false;
                    continue;
                }
                std::vector<int> resets;
                for (const auto& rc : e.resets) {
                    int ci = -1;
                    for (std::size_t i = 0; i < clocks_.size(); ++i)
                        if (clocks_[i] == rc) ci = static_cast<int>(i) + 1;
                    if (ci < 0) {
                        validation_error(e.line, e.col, "unknown clock in reset '" + rc + "'");
                        entry_ok = false;
                    } else {
                        resets.push_back(ci);
                    }
                }
                std::sort(resets.begin(), resets.end());
                resets.erase(std::unique(resets.begin(), resets.end()), resets.end());
                sum += e.prob;
                if (e.prob > 0) dist[{resets, tgt->second}] += e.prob;
            }
            if (!entry_ok) continue;
            if (sum != 1) {
                validation_error(t.line, t.col,
                                 "distribution sums to " + to_fraction_string(sum) +
                                     ", expected 1");
                continue;
            }
            for (auto& [key, p] : dist)
                tr.entries.push_back(TransitionEntry{key.first, key.second, p});
            pta.locations[static_cast<std::size_t>(src->second)].transitions.push_back(
                std::move(tr));
        }
        if (!result_.errors.empty()) return;

        // structural invariants
        Valuation zero(pta.real_clocks());
        if (!satisfies(zero, pta.locations[static_cast<std::size_t>(pta.initial)]
                                 .invariant.dbm()))
            validation_error(1, 1, "zero valuation violates the initial invariant");
        for (std::size_t i = 0; i < pta.locations.size(); ++i) {
            if (static_cast<int>(i) == pta.goal || static_cast<int>(i) == pta.fail) continue;
            if (pta.locations[i].transitions.empty())
                validation_error(1, 1,
                                 "location '" + pta.locations[i].name +
                                     "' has no outgoing transition");
        }
        if (!result_.errors.empty()) return;

        normalize_pta(pta);
        result_.pta = std::move(pta);
    }
};

} // namespace

ParseResult parse_pta(const std::string& text) { return Parser(text).run(); }

ParseResult parse_pta_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseResult r;
        r.errors.push_back(ParseError{0, 0, true, "cannot open " + path});
        return r;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pta(buf.str());
}

std::string serialize_pta(const Pta& pta, const std::vector<std::string>& header) {
    std::ostringstream out;
    for (const auto& h : header) out << "# " << h << "\n";
    out << "clocks";
    for (const auto& c : pta.clocks) out << " " << c;
    out << ";\n";
    if (!pta.actions.empty()) {
        out << "actions";
        for (const auto& a : pta.actions) out << " " << a;
        out << ";\n";
    }
    if (pta.declared_bound) out << "bound " << *pta.declared_bound << ";\n";
    out << "\n";
    for (std::size_t i = 0; i < pta.locations.size(); ++i) {
        const Location& l = pta.locations[i];
        out << "loc " << l.name << " inv \"" << l.invariant.text(pta.clocks) << "\"";
        if (static_cast<int>(i) == pta.initial) out << " init";
        if (static_cast<int>(i) == pta.goal) out << " goal";
        if (static_cast<int>(i) == pta.fail) out << " fail";
        out << ";\n";
    }
    out << "\n";
    for (std::size_t i = 0; i < pta.locations.size(); ++i) {
        if (static_cast<int>(i) == pta.goal || static_cast<int>(i) == pta.fail)
            continue; // self-loops are implied
        for (const auto& t : pta.locations[i].transitions) {
            out << "trans " << pta.locations[i].name << " guard \""
                << t.guard.text(pta.clocks) << "\" act "
                << pta.actions[static_cast<std::size_t>(t.action)] << " {";
            for (const auto& e : t.entries) {
                out << " " << to_fraction_string(e.prob) << " ->";
                if (!e.resets.empty()) {
                    out << " reset{";
                    for (std::size_t r = 0; r < e.resets.size(); ++r) {
                        if (r) out << ",";
                        out << pta.clocks[static_cast<std::size_t>(e.resets[r] - 1)];
                    }
                    out << "}";
                }
                out << " " << pta.locations[static_cast<std::size_t>(e.target)].name << ";";
            }
            out << " };\n";
        }
    }
    return out.str();
}

} // namespace ptawit
