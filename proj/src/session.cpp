#include "lclab/session.hpp"

#include <cctype>

namespace lclab {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    Lexer(const std::string& src, std::vector<Diagnostic>& diags)
        : src_(src), diags_(&diags) {
        advance();
    }

    const Token& cur() const { return cur_; }

    void advance() {
        skipSpace();
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::End;
            cur_.text = "<end of input>";
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                bump();
            cur_.kind = Tok::Ident;
            cur_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            bool over = false;
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = v * 10 + (src_[pos_] - '0');
                if (v > (1LL << 62)) over = true;
                bump();
            }
            cur_.kind = Tok::Int;
            cur_.text = src_.substr(start, pos_ - start);
            cur_.value = over ? -1 : v;
            if (over) report(cur_.line, cur_.col, "integer literal too large");
            return;
        }
        static const std::string punct = "=,;^*+-()";
        if (punct.find(c) != std::string::npos) {
            cur_.kind = Tok::Punct;
            cur_.text = std::string(1, c);
            bump();
            return;
        }
        report(line_, col_, std::string("unexpected character '") + c + "'");
        bump();
        advance();
    }

    void report(int line, int col, const std::string& msg) {
        diags_->push_back({line, col, msg});
    }

  private:
    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skipSpace() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {  // comment to end of line
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    std::vector<Diagnostic>* diags_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_;
};

constexpr long long kMaxExponent = 4096;

class Parser {
  public:
    Parser(const std::string& text, ParseResult& out) : out_(&out),
          lex_(text, out.diagnostics) {}

    void run() {
        while (lex_.cur().kind != Tok::End) {
            if (!statement()) recover();
        }
    }

  private:
    bool statement() {
        const Token& t = lex_.cur();
        if (t.kind != Tok::Ident) {
            err(t, "expected 'ring', 'ideal' or 'cmd'");
            return false;
        }
        if (t.text == "ring") return ringDecl();
        if (t.text == "ideal") return idealDecl();
        if (t.text == "cmd") return cmdDecl();
        err(t, "unknown statement '" + t.text + "'");
        return false;
    }

    bool ringDecl() {
        Token kw = lex_.cur();
        lex_.advance();
        if (out_->ast.ring) {
            err(kw, "ring already declared");
            return false;
        }
        if (!expectIdent("p")) return false;
        if (!expectPunct("=")) return false;
        long long p = 0;
        if (!expectInt(p)) return false;
        if (!expectIdent("vars")) return false;
        if (!expectPunct("=")) return false;
        std::vector<std::string> vars;
        while (true) {
            const Token& t = lex_.cur();
            if (t.kind != Tok::Ident) {
                err(t, "expected variable name");
                return false;
            }
            for (const std::string& v : vars)
                if (v == t.text) err(t, "duplicate variable '" + t.text + "'");
            vars.push_back(t.text);
            lex_.advance();
            if (lex_.cur().kind == Tok::Punct && lex_.cur().text == ",") {
                lex_.advance();
                continue;
            }
            break;
        }
        if (!expectPunct(";")) return false;
        if (vars.size() > static_cast<size_t>(kMaxVars - 1)) {
            err(kw, "at most " + std::to_string(kMaxVars - 1) + " variables supported");
            return false;
        }
        if (p < 3 || p > 2147483647 || !PrimeField::isPrime(static_cast<uint32_t>(p))) {
            err(kw, "p must be an odd prime");
            return false;
        }
        out_->ast.ring.emplace(static_cast<uint32_t>(p), vars);
        return true;
    }

    bool idealDecl() {
        Token kw = lex_.cur();
        lex_.advance();
        const Token& nameTok = lex_.cur();
        if (nameTok.kind != Tok::Ident) {
            err(nameTok, "expected ideal name");
            return false;
        }
        std::string name = nameTok.text;
        lex_.advance();
        if (!expectPunct("=")) return false;
        if (!out_->ast.ring) {
            err(kw, "ring not declared");
            return false;
        }
        if (out_->ast.findIdeal(name)) err(nameTok, "duplicate ideal '" + name + "'");
        std::vector<Polynomial> gens;
        while (true) {
            Polynomial g;
            if (!polyExpr(g)) return false;
            gens.push_back(std::move(g));
            if (lex_.cur().kind == Tok::Punct && lex_.cur().text == ",") {
                lex_.advance();
                continue;
            }
            break;
        }
        if (!expectPunct(";")) return false;
        out_->ast.ideals.emplace_back(std::move(name), std::move(gens));
        return true;
    }

    bool cmdDecl() {
        Token kw = lex_.cur();
        lex_.advance();
        SessionCommand cmd;
        cmd.line = kw.line;
        cmd.col = kw.col;
        const Token& verbTok = lex_.cur();
        if (verbTok.kind != Tok::Ident) {
            err(verbTok, "expected command verb");
            return false;
        }
        cmd.verb = verbTok.text;
        if (cmd.verb != "perturb" && cmd.verb != "invariants")
            err(verbTok, "unknown command verb '" + cmd.verb + "'");
        lex_.advance();
        const Token& tgtTok = lex_.cur();
        if (tgtTok.kind != Tok::Ident) {
            err(tgtTok, "expected ideal name");
            return false;
        }
        cmd.target = tgtTok.text;
        if (!out_->ast.findIdeal(cmd.target))
            err(tgtTok, "undeclared ideal '" + cmd.target + "'");
        lex_.advance();
        while (lex_.cur().kind == Tok::Ident) {
            std::string key = lex_.cur().text;
            Token keyTok = lex_.cur();
            lex_.advance();
            if (!expectPunct("=")) return false;
            long long v = 0;
            if (!expectInt(v)) return false;
            if (cmd.params.count(key)) err(keyTok, "duplicate parameter '" + key + "'");
            cmd.params[key] = v;
        }
        if (!expectPunct(";")) return false;
        out_->ast.commands.push_back(std::move(cmd));
        return true;
    }

    // polyexpr := term (('+'|'-') term)*
    bool polyExpr(Polynomial& out) {
        const Ring& R = *out_->ast.ring;
        Polynomial acc;
        bool neg = false;
        if (lex_.cur().kind == Tok::Punct &&
            (lex_.cur().text == "-" || lex_.cur().text == "+")) {
            neg = lex_.cur().text == "-";
            lex_.advance();
        }
        Polynomial t;
        if (!term(t)) return false;
        acc = neg ? negP(R, t) : t;
        while (lex_.cur().kind == Tok::Punct &&
               (lex_.cur().text == "+" || lex_.cur().text == "-")) {
            bool minus = lex_.cur().text == "-";
            lex_.advance();
            if (!term(t)) return false;
            acc = minus ? subP(R, acc, t) : addP(R, acc, t);
        }
        out = std::move(acc);
        return true;
    }

    bool term(Polynomial& out) {
        const Ring& R = *out_->ast.ring;
        Polynomial acc;
        if (!factor(acc)) return false;
        while (lex_.cur().kind == Tok::Punct && lex_.cur().text == "*") {
            lex_.advance();
            Polynomial f;
            if (!factor(f)) return false;
            acc = mulP(R, acc, f);
        }
        out = std::move(acc);
        return true;
    }

    bool factor(Polynomial& out) {
        const Ring& R = *out_->ast.ring;
        if (lex_.cur().kind == Tok::Punct && lex_.cur().text == "-") {
            lex_.advance();
            Polynomial f;
            if (!factor(f)) return false;
            out = negP(R, f);
            return true;
        }
        Polynomial base;
        if (!primary(base)) return false;
        if (lex_.cur().kind == Tok::Punct && lex_.cur().text == "^") {
            Token caret = lex_.cur();
            lex_.advance();
            long long e = 0;
            if (!expectInt(e)) return false;
            if (e < 0 || e > kMaxExponent) {
                err(caret, "bad exponent " + std::to_string(e));
                return false;
            }
            Polynomial acc = polyConst(R, 1);
            for (long long k = 0; k < e; ++k) acc = mulP(R, acc, base);
            base = std::move(acc);
        }
        out = std::move(base);
        return true;
    }

    bool primary(Polynomial& out) {
        const Ring& R = *out_->ast.ring;
        const Token& t = lex_.cur();
        if (t.kind == Tok::Int) {
            out = polyConst(R, t.value);
            lex_.advance();
            return true;
        }
        if (t.kind == Tok::Ident) {
            for (int i = 0; i < R.nvars(); ++i) {
                if (R.varNames()[i] == t.text) {
                    out = polyTerm(R, R.field().one(), R.var(i));
                    lex_.advance();
                    return true;
                }
            }
            err(t, "undeclared variable '" + t.text + "'");
            return false;
        }
        if (t.kind == Tok::Punct && t.text == "(") {
            lex_.advance();
            if (!polyExpr(out)) return false;
            return expectPunct(")");
        }
        err(t, "expected a polynomial");
        return false;
    }

    bool expectIdent(const std::string& what) {
        const Token& t = lex_.cur();
        if (t.kind != Tok::Ident || t.text != what) {
            err(t, "expected '" + what + "'");
            return false;
        }
        lex_.advance();
        return true;
    }

    bool expectPunct(const std::string& what) {
        const Token& t = lex_.cur();
        if (t.kind != Tok::Punct || t.text != what) {
            err(t, "expected '" + what + "'");
            return false;
        }
        lex_.advance();
        return true;
    }

    bool expectInt(long long& v) {
        const Token& t = lex_.cur();
        if (t.kind != Tok::Int) {
            err(t, "expected an integer");
            return false;
        }
        v = t.value;
        lex_.advance();
        return true;
    }

    void err(const Token& t, const std::string& msg) {
        lex_.report(t.line, t.col, msg + " (got '" + t.text + "')");
    }

    // skip to just past the next ';'
    void recover() {
        while (lex_.cur().kind != Tok::End) {
            bool semi = lex_.cur().kind == Tok::Punct && lex_.cur().text == ";";
            lex_.advance();
            if (semi) break;
        }
    }

    ParseResult* out_;
    Lexer lex_;
};

}  // namespace

ParseResult parseSession(const std::string& text) {
    ParseResult out;
    Parser p(text, out);
    p.run();
    return out;
}

Polynomial parsePolynomial(const Ring& R, const std::string& text) {
    std::string vars;
    for (int i = 0; i < R.nvars(); ++i) {
        if (i) vars += ",";
        vars += R.varNames()[i];
    }
    std::string session = "ring p=" + std::to_string(R.field().modulus()) +
                          " vars=" + vars + "; ideal tmp_ = " + text + ";";
    ParseResult r = parseSession(session);
    if (!r.ok())
        throw EngineError("cannot parse polynomial '" + text + "': " +
                          r.diagnostics.front().message);
    return r.ast.ideals.front().second.front();
}

}  // namespace lclab
