// Copyright 2026 the mcsc authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "mcsc/parse_mcs.hpp"

#include "mcsc/errors.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace mcsc {

namespace {

struct Token {
    enum class Kind { ident, number, punct, end };

    Kind kind = Kind::end;
    std::string text;
    int line = 1;
    int column = 1;
};

bool is_reserved_word(const std::string& word) {
    return word == "context" || word == "atoms" || word == "choice" || word == "deny" ||
           word == "not" || word == "asp" || word == "cwa";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_blank();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::end;
            current_.text.clear();
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                bump();
            current_.kind = Token::Kind::ident;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '.')) {
                // A '.' directly after digits could close a statement; only
                // consume it when a digit follows.
                if (text_[pos_] == '.' &&
                    (pos_ + 1 >= text_.size() ||
                     !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))
                    break;
                bump();
            }
            current_.kind = Token::Kind::number;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            bump();
            bump();
            current_.kind = Token::Kind::punct;
            current_.text = ":-";
            return;
        }
        bump();
        current_.kind = Token::Kind::punct;
        current_.text = std::string(1, c);
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

[[noreturn]] void syntax_error(const Token& at, const std::string& message) {
    throw SourceError(Errc::parse_error, message, at.line, at.column);
}

struct PendingBridge {
    std::string target_name;
    Atom head;
    std::vector<std::pair<std::string, Atom>> pos;
    std::vector<std::pair<std::string, Atom>> neg;
    std::optional<Degree> degree;
    Token where;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    McsDocument parse() {
        while (lexer_.peek().kind != Token::Kind::end)
            parse_context();
        resolve_bridges();
        finalize_alphabets();
        doc_.mcs.validate();
        return std::move(doc_);
    }

private:
    Token expect_punct(const std::string& text) {
        Token t = lexer_.take();
        if (t.kind != Token::Kind::punct || t.text != text)
            syntax_error(t, "expected '" + text + "'");
        return t;
    }

    Token expect_name(const char* what) {
        Token t = lexer_.take();
        if (t.kind != Token::Kind::ident || is_reserved_word(t.text))
            syntax_error(t, std::string("expected ") + what);
        return t;
    }

    bool peek_punct(const std::string& text) const {
        return lexer_.peek().kind == Token::Kind::punct && lexer_.peek().text == text;
    }

    bool peek_word(const std::string& word) const {
        return lexer_.peek().kind == Token::Kind::ident && lexer_.peek().text == word;
    }

    void parse_context() {
        Token kw = lexer_.take();
        if (kw.kind != Token::Kind::ident || kw.text != "context")
            syntax_error(kw, "expected 'context'");
        Token name = expect_name("a context name");
        if (doc_.mcs.index_of(name.text) >= 0)
            syntax_error(name, "duplicate context '" + name.text + "'");

        Context ctx;
        ctx.name = name.text;
        if (peek_word("asp")) {
            lexer_.take();
        } else if (peek_word("cwa")) {
            lexer_.take();
            ctx.program.semantics = Semantics::choice_minimal_model;
        }
        declared_.push_back({});
        expect_punct("{");
        const int index = static_cast<int>(doc_.mcs.contexts.size());
        doc_.mcs.contexts.push_back(std::move(ctx));
        while (!peek_punct("}"))
            parse_statement(index);
        lexer_.take(); // '}'
    }

    void parse_statement(int ctx) {
        Program& program = doc_.mcs.contexts[static_cast<std::size_t>(ctx)].program;
        if (peek_word("atoms")) {
            lexer_.take();
            do {
                Token a = expect_name("an atom");
                declared_[static_cast<std::size_t>(ctx)].insert(a.text);
            } while (!peek_punct("."));
            lexer_.take();
            return;
        }
        if (peek_word("choice")) {
            lexer_.take();
            ChoiceClause clause;
            clause.alternatives.push_back(expect_name("an atom").text);
            while (peek_punct("|")) {
                lexer_.take();
                clause.alternatives.push_back(expect_name("an atom").text);
            }
            expect_punct(".");
            program.choices.push_back(std::move(clause));
            program.semantics = Semantics::choice_minimal_model;
            return;
        }
        if (peek_word("deny")) {
            lexer_.take();
            DenyClause clause;
            clause.atoms.insert(expect_name("an atom").text);
            while (peek_punct(",")) {
                lexer_.take();
                clause.atoms.insert(expect_name("an atom").text);
            }
            expect_punct(".");
            program.denies.push_back(std::move(clause));
            return;
        }
        if (peek_punct("(")) {
            parse_bridge();
            return;
        }
        parse_kbrule(program);
    }

    void parse_kbrule(Program& program) {
        Rule rule;
        rule.head = expect_name("a rule head").text;
        if (peek_punct(":-")) {
            lexer_.take();
            while (true) {
                bool negated = false;
                if (peek_word("not")) {
                    lexer_.take();
                    negated = true;
                }
                Token a = expect_name("an atom");
                (negated ? rule.neg : rule.pos).insert(a.text);
                if (!peek_punct(","))
                    break;
                lexer_.take();
            }
        }
        Degree degree = parse_degree_opt();
        expect_punct(".");
        program.rules.push_back(PossRule{std::move(rule), degree});
    }

    std::pair<std::string, Atom> parse_qualified() {
        expect_punct("(");
        Token ctx = expect_name("a context name");
        expect_punct(":");
        Token atom = expect_name("an atom");
        expect_punct(")");
        return {ctx.text, atom.text};
    }

    void parse_bridge() {
        PendingBridge bridge;
        bridge.where = lexer_.peek();
        auto [target, head] = parse_qualified();
        bridge.target_name = target;
        bridge.head = head;
        expect_punct(":-");
        while (true) {
            bool negated = false;
            if (peek_word("not")) {
                lexer_.take();
                negated = true;
            }
            Token at = lexer_.peek();
            if (!peek_punct("("))
                syntax_error(at, "expected '(context : atom)' in a bridge-rule body");
            auto literal = parse_qualified();
            (negated ? bridge.neg : bridge.pos).push_back(std::move(literal));
            if (!peek_punct(","))
                break;
            lexer_.take();
        }
        bridge.degree = parse_degree_maybe();
        expect_punct(".");
        pending_.push_back(std::move(bridge));
    }

    Degree parse_degree_opt() {
        auto d = parse_degree_maybe();
        return d ? *d : Degree::one();
    }

    std::optional<Degree> parse_degree_maybe() {
        if (!peek_punct("["))
            return std::nullopt;
        lexer_.take();
        Token num = lexer_.take();
        if (num.kind != Token::Kind::number)
            syntax_error(num, "expected a decimal degree");
        Degree degree = Degree::zero();
        try {
            degree = Degree::parse(num.text);
        } catch (const Error& e) {
            throw SourceError(e.code() == Errc::degree_out_of_range ? Errc::degree_out_of_range
                                                                    : Errc::parse_error,
                              e.what(), num.line, num.column);
        }
        expect_punct("]");
        doc_.mcs.possibilistic = true;
        return degree;
    }

    void resolve_bridges() {
        for (const auto& p : pending_) {
            BridgeRule rule;
            auto resolve = [&](const std::string& name) {
                int idx = doc_.mcs.index_of(name);
                if (idx < 0)
                    throw SourceError(Errc::unknown_context, "unknown context '" + name + "'",
                                      p.where.line, p.where.column);
                return idx;
            };
            rule.target = resolve(p.target_name);
            rule.head = p.head;
            for (const auto& [ctx, atom] : p.pos)
                rule.pos.insert({resolve(ctx), atom});
            for (const auto& [ctx, atom] : p.neg)
                rule.neg.insert({resolve(ctx), atom});
            if (p.degree)
                rule.necessity = *p.degree;
            if (!declared_[static_cast<std::size_t>(rule.target)].empty() &&
                !declared_[static_cast<std::size_t>(rule.target)].count(rule.head))
                throw SourceError(Errc::invalid_program,
                                  "bridge head '" + rule.head +
                                      "' is outside the declared alphabet of '" + p.target_name +
                                      "'",
                                  p.where.line, p.where.column);
            doc_.mcs.bridges.push_back(std::move(rule));
        }
    }

    void finalize_alphabets() {
        for (std::size_t i = 0; i < doc_.mcs.contexts.size(); ++i) {
            Program& program = doc_.mcs.contexts[i].program;
            AtomSet inferred = program.mentioned_atoms();
            const AtomSet heads = doc_.mcs.incoming_heads(static_cast<int>(i));
            inferred.insert(heads.begin(), heads.end());
            const AtomSet& declared = declared_[i];
            if (declared.empty()) {
                program.alphabet = inferred;
            } else {
                for (const auto& atom : inferred)
                    if (!declared.count(atom))
                        fail(Errc::invalid_program,
                             "atom '" + atom + "' is outside the declared alphabet of '" +
                                 doc_.mcs.contexts[i].name + "'");
                program.alphabet = declared;
            }
        }
    }

    Lexer lexer_;
    McsDocument doc_;
    std::vector<PendingBridge> pending_;
    std::vector<AtomSet> declared_;
};

} // namespace

McsDocument parse_mcs(std::string_view text) {
    return Parser(text).parse();
}

namespace {

void print_degree(std::ostream& out, const Mcs& mcs, Degree degree) {
    if (mcs.possibilistic)
        out << " [" << degree.dec().str() << "]";
}

} // namespace

std::string print_mcs(const Mcs& mcs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < mcs.contexts.size(); ++i) {
        const Context& ctx = mcs.contexts[i];
        out << "context " << ctx.name << " "
            << (ctx.program.semantics == Semantics::answer_set ? "asp" : "cwa") << " {\n";

        AtomSet inferred = ctx.program.mentioned_atoms();
        const AtomSet heads = mcs.incoming_heads(static_cast<int>(i));
        inferred.insert(heads.begin(), heads.end());
        if (ctx.program.alphabet != inferred) {
            out << "  atoms";
            for (const auto& atom : ctx.program.alphabet)
                out << " " << atom;
            out << ".\n";
        }

        for (const auto& r : ctx.program.rules) {
            out << "  " << r.rule.head;
            bool first = true;
            for (const auto& a : r.rule.pos) {
                out << (first ? " :- " : ", ") << a;
                first = false;
            }
            for (const auto& a : r.rule.neg) {
                out << (first ? " :- not " : ", not ") << a;
                first = false;
            }
            print_degree(out, mcs, r.necessity);
            out << ".\n";
        }
        for (const auto& c : ctx.program.choices) {
            out << "  choice ";
            for (std::size_t k = 0; k < c.alternatives.size(); ++k)
                out << (k ? " | " : "") << c.alternatives[k];
            out << ".\n";
        }
        for (const auto& d : ctx.program.denies) {
            out << "  deny ";
            bool first = true;
            for (const auto& a : d.atoms) {
                out << (first ? "" : ", ") << a;
                first = false;
            }
            out << ".\n";
        }
        for (const auto& b : mcs.bridges) {
            if (b.target != static_cast<int>(i))
                continue;
            out << "  (" << ctx.name << " : " << b.head << ") :- ";
            bool first = true;
            for (const auto& l : b.pos) {
                out << (first ? "" : ", ") << "("
                    << mcs.contexts[static_cast<std::size_t>(l.ctx)].name << " : " << l.atom
                    << ")";
                first = false;
            }
            for (const auto& l : b.neg) {
                out << (first ? "not (" : ", not (")
                    << mcs.contexts[static_cast<std::size_t>(l.ctx)].name << " : " << l.atom
                    << ")";
                first = false;
            }
            print_degree(out, mcs, b.necessity);
            out << ".\n";
        }
        out << "}\n";
    }
    return out.str();
}

} // namespace mcsc
