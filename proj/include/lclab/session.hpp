#ifndef LCLAB_SESSION_HPP
#define LCLAB_SESSION_HPP

#include <map>
#include <optional>
#include <string>

#include "lclab/poly.hpp"

namespace lclab {

struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string message;
};

struct SessionCommand {
    std::string verb;
    std::string target;
    std::map<std::string, long long> params;
    int line = 0;
    int col = 0;
};

struct SessionAst {
    std::optional<Ring> ring;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
    std::vector<SessionCommand> commands;

    const std::vector<Polynomial>* findIdeal(const std::string& name) const {
        for (const auto& [n, gens] : ideals)
            if (n == name) return &gens;
        return nullptr;
    }
};

struct ParseResult {
    SessionAst ast;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

// Grammar:
//   ring p=<int> vars=<id>,...;
//   ideal <name> = <polyexpr>, ...;
//   cmd <verb> <name> [key=value ...];
// Polynomial expressions support +, -, *, ^, integer literals and parentheses.
// Never throws on malformed input; every failure becomes a located diagnostic.
ParseResult parseSession(const std::string& text);

// Expression parser against an existing ring; throws EngineError on bad input.
Polynomial parsePolynomial(const Ring& R, const std::string& text);

}  // namespace lclab

#endif
