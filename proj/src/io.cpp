// Recursive-descent parsers and canonical printers for the literal grammar.

#include "totm/io.hpp"

#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "totm/base.hpp"

namespace totm {

namespace {

class Parser {
  public:
    Parser(const Params& p, const std::string& text)
        : p_(p), text_(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(line_, col_, msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    int parse_nat() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        long value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) fail("number too large");
            advance();
        }
        return static_cast<int>(value);
    }

    Word parse_word() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'e') {
            advance();
            return {};
        }
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a word ('e' or digits)");
        Word w;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int d = text_[pos_] - '0';
            if (d >= p_.k) fail("digit out of range for k");
            w.push_back(static_cast<std::uint8_t>(d));
            advance();
        }
        return w;
    }

    Shrubbery parse_shrubbery() {
        expect('(');
        int root = parse_nat();
        if (root >= p_.r) fail("root index out of range");
        expect(',');
        expect('(');
        Shrub shrub;
        shrub.push_back(parse_word());
        while (accept(',')) shrub.push_back(parse_word());
        expect(')');
        expect(')');
        if (static_cast<int>(shrub.size()) != p_.n)
            fail("expected one coordinate word per dimension");
        return Shrubbery{root, std::move(shrub)};
    }

    TermPtr parse_term() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a term");
        char c = text_[pos_];
        if (c == 'g') {
            advance();
            int idx = parse_nat();
            if (idx >= p_.r) fail("generator index out of range");
            return mk_gen(idx);
        }
        if (c == 'a') {
            advance();
            int dim = parse_nat();
            if (dim >= p_.n) fail("dimension out of range");
            expect('_');
            int digit = parse_nat();
            if (digit >= p_.k) fail("digit out of range for k");
            expect('(');
            TermPtr kid = parse_term();
            expect(')');
            return mk_alpha_raw(dim, digit, std::move(kid));
        }
        if (c == 'l') {
            advance();
            int dim = parse_nat();
            if (dim >= p_.n) fail("dimension out of range");
            expect('(');
            std::vector<TermPtr> kids;
            kids.push_back(parse_term());
            while (accept(',')) kids.push_back(parse_term());
            expect(')');
            if (static_cast<int>(kids.size()) != p_.k)
                fail("expected exactly k join arguments");
            return mk_lambda_raw(dim, std::move(kids));
        }
        fail("expected a term ('g', 'a' or 'l')");
    }

    void check_done() {
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const Params& p_;
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Word parse_word_literal(const Params& p, const std::string& text) {
    check_params(p);
    Parser parser(p, text);
    Word w = parser.parse_word();
    parser.check_done();
    return w;
}

Shrubbery parse_shrubbery_literal(const Params& p, const std::string& text) {
    check_params(p);
    Parser parser(p, text);
    Shrubbery s = parser.parse_shrubbery();
    parser.check_done();
    return s;
}

Code parse_code_literal(const Params& p, const std::string& text) {
    check_params(p);
    Parser parser(p, text);
    parser.expect('{');
    std::vector<Shrubbery> elems;
    elems.push_back(parser.parse_shrubbery());
    while (parser.accept(';')) elems.push_back(parser.parse_shrubbery());
    parser.expect('}');
    parser.check_done();
    return make_code(p, std::move(elems));
}

TotElement parse_tot_literal(const Params& p, const std::string& text) {
    check_params(p);
    Parser parser(p, text);
    parser.expect('{');
    std::vector<Shrubbery> domain;
    std::vector<Shrubbery> images;
    do {
        domain.push_back(parser.parse_shrubbery());
        parser.expect('-');
        parser.expect('>');
        images.push_back(parser.parse_shrubbery());
    } while (parser.accept(';'));
    parser.expect('}');
    parser.check_done();
    return make_tot(p, std::move(domain), std::move(images));
}

LabeledGenSet parse_labeled_literal(const Params& p, const std::string& text) {
    check_params(p);
    Parser parser(p, text);
    parser.expect('{');
    std::map<Shrubbery, int> labels;
    do {
        Shrubbery key = parser.parse_shrubbery();
        parser.expect(':');
        int label = parser.parse_nat();
        if (!labels.emplace(std::move(key), label).second)
            parser.fail("duplicate key in labeled set");
    } while (parser.accept(';'));
    parser.expect('}');
    parser.check_done();
    return make_labeled(p, std::move(labels));
}

RootSystem parse_root_system_literal(const Params& p,
                                     const std::string& text) {
    check_params(p);
    Parser parser(p, text);
    parser.expect('{');
    RootSystem w;
    w.push_back(parser.parse_shrubbery());
    while (parser.accept(';')) w.push_back(parser.parse_shrubbery());
    parser.expect('}');
    parser.check_done();
    validate_root_system(p, w);
    return w;
}

TermPtr parse_term_literal(const Params& p, const std::string& text) {
    check_params(p);
    Parser parser(p, text);
    TermPtr t = parser.parse_term();
    parser.check_done();
    validate(p, t);
    return t;
}

Endo parse_endo_literal(const Params& p, const std::string& text) {
    check_params(p);
    Parser parser(p, text);
    parser.expect('[');
    std::vector<TermPtr> images;
    images.push_back(parser.parse_term());
    while (parser.accept(';')) images.push_back(parser.parse_term());
    parser.expect(']');
    parser.check_done();
    return make_endo(p, std::move(images));
}

std::string code_to_string(const Code& code) {
    std::string out = "{ ";
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) out += "; ";
        out += to_string(code[i]);
    }
    out += " }";
    return out;
}

std::string labeled_to_string(const LabeledGenSet& L) {
    std::string out = "{ ";
    bool first = true;
    for (const auto& [key, label] : L.labels) {
        if (!first) out += "; ";
        first = false;
        out += to_string(key);
        out += ": ";
        out += std::to_string(label);
    }
    out += " }";
    return out;
}

std::string root_system_to_string(const RootSystem& w) {
    std::string out = "{ ";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "; ";
        out += to_string(w[i]);
    }
    out += " }";
    return out;
}

std::string endo_to_string(const Endo& e) {
    std::string out = "[";
    for (std::size_t i = 0; i < e.images.size(); ++i) {
        if (i) out += "; ";
        out += to_string(e.images[i]);
    }
    out += "]";
    return out;
}

}  // namespace totm
