#include "virmod/parse.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace virmod {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept(const std::string& lit) {
        skip_ws();
        if (s_.compare(pos_, lit.size(), lit) == 0) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void expect(const std::string& lit) {
        if (!accept(lit)) fail("expected '" + lit + "'");
    }
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "syntax error at position " << pos_ << ": " << what;
        throw std::invalid_argument(os.str());
    }

    std::string identifier() {
        skip_ws();
        std::string name;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            name += s_[pos_++];
        if (name.empty()) fail("expected a name");
        return name;
    }

    void seek(std::size_t pos) { pos_ = pos; }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        return std::stol(s_.substr(start, pos_ - start));
    }

    mpq_class rational() {
        mpz_class num(integer());
        if (accept('/')) {
            long den = integer();
            if (den == 0) fail("zero denominator");
            mpq_class q(num, mpz_class(den));
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }

    // rational | '(' rational ')' '+' '(' rational ')' 'i'
    Scalar scalar() {
        if (accept('(')) {
            mpq_class re = rational();
            expect(')');
            expect('+');
            expect('(');
            mpq_class im = rational();
            expect(')');
            expect('i');
            return Scalar(re, im);
        }
        return Scalar(rational());
    }

    std::size_t pos() const { return pos_; }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

struct RawTerm {
    Scalar coeff;
    Monomial mono;
    bool has_loop = false;
    long loop = 0;
};

Monomial parse_monomial(Cursor& c, const VacuumSpec& spec, Level level) {
    Monomial m;
    while (c.accept("d(")) {
        long idx = c.integer();
        c.expect(')');
        long e = 1;
        if (c.accept('^')) {
            e = c.integer();
            if (e < 0) c.fail("exponent must be nonnegative");
        }
        if (idx < level_lo(level) || idx > spec.r - 1) {
            std::ostringstream os;
            os << "index " << idx << " not a PBW generator";
            c.fail(os.str());
        }
        if (e > 0) {
            if (!m.empty() && m.back().first > idx) c.fail("generators must appear in ascending order");
            if (!m.empty() && m.back().first == idx)
                m.back().second += static_cast<int>(e);
            else
                m.push_back({static_cast<int>(idx), static_cast<int>(e)});
        }
        c.accept('*');
    }
    return m;
}

RawTerm parse_term(Cursor& c, const VacuumSpec& spec, Level level) {
    RawTerm t{Scalar(1), {}, false, 0};
    char p = c.peek();
    if (p == '(' || std::isdigit(static_cast<unsigned char>(p)) || p == '-') {
        t.coeff = c.scalar();
        c.accept('*');
    }
    t.mono = parse_monomial(c, spec, level);
    c.expect("|vac>");
    if (c.accept("(x)")) {
        c.expect("t^");
        t.has_loop = true;
        t.loop = c.integer();
    }
    return t;
}

std::vector<RawTerm> parse_terms(Cursor& c, const VacuumSpec& spec, Level level) {
    std::vector<RawTerm> out;
    std::size_t mark = c.pos();
    if (c.accept('0') && c.done()) return out;
    c.seek(mark);
    bool negate = c.accept('-');
    for (;;) {
        RawTerm t = parse_term(c, spec, level);
        if (negate) t.coeff = -t.coeff;
        out.push_back(std::move(t));
        if (c.accept('+'))
            negate = false;
        else if (c.accept('-'))
            negate = true;
        else
            break;
    }
    if (!c.done()) c.fail("trailing input");
    return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    Cursor c(text);
    Scalar out = c.scalar();
    if (!c.done()) c.fail("trailing input");
    return out;
}

ModuleElement parse_module_element(const std::string& text, const VacuumSpec& spec, Level level) {
    Cursor c(text);
    auto terms = parse_terms(c, spec, level);
    ModuleElement out(level);
    for (const auto& t : terms) {
        if (t.has_loop) throw std::invalid_argument("loop part not allowed in a module element");
        out.add_term(t.mono, t.coeff);
    }
    return out;
}

LoopElement parse_loop_element(const std::string& text, const VacuumSpec& spec, Level level) {
    Cursor c(text);
    auto terms = parse_terms(c, spec, level);
    LoopElement out(level);
    for (const auto& t : terms) {
        if (!t.has_loop) throw std::invalid_argument("loop element term is missing '(x) t^n'");
        out.add_term(t.mono, t.loop, t.coeff);
    }
    return out;
}

std::variant<ModuleElement, LoopElement> parse_element(const std::string& text,
                                                       const VacuumSpec& spec, Level level) {
    if (text.find("(x)") != std::string::npos) return parse_loop_element(text, spec, level);
    return parse_module_element(text, spec, level);
}

VacuumSpec parse_vacuum(const std::string& text) {
    Cursor c(text);
    c.expect("vac(");
    c.expect("r");
    c.expect('=');
    long r = c.integer();
    c.expect(';');
    std::vector<Scalar> mu;
    mu.push_back(c.scalar());
    while (c.accept(',')) mu.push_back(c.scalar());
    c.expect(')');
    if (!c.done()) c.fail("trailing input");
    return VacuumSpec(static_cast<int>(r), std::move(mu));
}

namespace {

// name=value; name=value; ... ) with ')' consumed
std::map<std::string, Scalar> parse_kv(Cursor& c) {
    std::map<std::string, Scalar> kv;
    for (;;) {
        std::string name = c.identifier();
        c.expect('=');
        kv[name] = c.scalar();
        if (c.accept(';')) continue;
        c.expect(')');
        break;
    }
    return kv;
}

Scalar need(const std::map<std::string, Scalar>& kv, const std::string& name, Cursor& c) {
    auto it = kv.find(name);
    if (it == kv.end()) c.fail("missing parameter '" + name + "'");
    return it->second;
}

std::string take_spec_text(Cursor& c, const std::string& text) {
    // consume a balanced vac(...) chunk
    std::size_t start = text.find("vac", c.pos());
    if (start == std::string::npos) c.fail("expected vac(...)");
    std::size_t open = text.find('(', start);
    if (open == std::string::npos) c.fail("expected vac(...)");
    int depth = 1;
    std::size_t i = open + 1;
    while (i < text.size() && depth > 0) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        ++i;
    }
    if (depth != 0) c.fail("unbalanced vac(...)");
    c.seek(i);
    return text.substr(start, i - start);
}

}  // namespace

std::variant<ModuleDescriptor, EParams> parse_descriptor(const std::string& text) {
    Cursor c(text);
    if (c.accept("L(")) {
        VacuumSpec spec = parse_vacuum(take_spec_text(c, text));
        c.expect(';');
        auto kv = parse_kv(c);
        if (!c.done()) c.fail("trailing input");
        return ModuleDescriptor::of(
            LParams(spec, need(kv, "lambda", c), need(kv, "a", c), need(kv, "b", c)));
    }
    if (c.accept("N(")) {
        VacuumSpec spec = parse_vacuum(take_spec_text(c, text));
        c.expect(';');
        auto kv = parse_kv(c);
        if (!c.done()) c.fail("trailing input");
        return ModuleDescriptor::of(NParams{spec, need(kv, "a", c), need(kv, "twist", c)});
    }
    if (c.accept("A(")) {
        auto kv = parse_kv(c);
        if (!c.done()) c.fail("trailing input");
        return ModuleDescriptor::of(AParams{need(kv, "a", c), need(kv, "b", c)});
    }
    const bool is_l0 = c.accept("L0(");
    if (is_l0 || c.accept("L1(")) {
        auto kv = parse_kv(c);
        if (!c.done()) c.fail("trailing input");
        return ModuleDescriptor::of(
            ParityParams{is_l0 ? 0 : 1, need(kv, "a", c), need(kv, "bprime", c)});
    }
    if (c.accept("E(")) {
        auto kv = parse_kv(c);
        if (!c.done()) c.fail("trailing input");
        return EParams(need(kv, "lambda", c), need(kv, "b", c), need(kv, "gamma", c),
                       need(kv, "p", c));
    }
    c.fail("expected one of L(, N(, A(, L0(, L1(, E(");
}

TruncationProfile parse_profile(const std::string& text) {
    TruncationProfile p;
    Cursor c(text);
    while (!c.done()) {
        std::string name = c.identifier();
        c.expect('=');
        long v = c.integer();
        if (v < 0) c.fail("profile bounds must be nonnegative");
        if (name == "dmax")
            p.dmax = static_cast<int>(v);
        else if (name == "bmax")
            p.bmax = static_cast<int>(v);
        else if (name == "win")
            p.win = static_cast<int>(v);
        else if (name == "fuel")
            p.fuel = static_cast<int>(v);
        else if (name == "kmax")
            p.kmax = static_cast<int>(v);
        else
            c.fail("unknown profile field '" + name + "'");
        if (!c.accept(',')) break;
    }
    if (!c.done()) c.fail("trailing input");
    return p;
}

std::string render(const Scalar& s) { return s.str(); }

std::string render(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, e] : m) {
        if (!first) os << "*";
        first = false;
        os << "d(" << idx << ")";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

namespace {

void render_term(std::ostream& os, bool first, const Scalar& coeff, const Monomial& mono,
                 bool has_loop, long loop) {
    Scalar c = coeff;
    if (first) {
        if (c.is_real() && sgn(c.real()) < 0) {
            os << "-";
            c = -c;
        }
    } else {
        if (c.is_real() && sgn(c.real()) < 0) {
            os << " - ";
            c = -c;
        } else {
            os << " + ";
        }
    }
    if (!c.is_one()) os << c.str() << "*";
    os << render(mono) << "|vac>";
    if (has_loop) os << " (x) t^" << loop;
}

}  // namespace

std::string render(const ModuleElement& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v.terms()) {
        render_term(os, first, c, m, false, 0);
        first = false;
    }
    return os.str();
}

std::string render(const LoopElement& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : v.terms()) {
        render_term(os, first, c, key.first, true, key.second);
        first = false;
    }
    return os.str();
}

std::string render(const VacuumSpec& spec) {
    std::ostringstream os;
    os << "vac(r=" << spec.r << "; ";
    for (std::size_t i = 0; i < spec.charges.size(); ++i) {
        if (i) os << ", ";
        os << spec.charges[i].str();
    }
    os << ")";
    return os.str();
}

std::string render(const ModuleDescriptor& d) {
    std::ostringstream os;
    switch (d.family()) {
        case Family::L: {
            const auto& p = std::get<LParams>(d.params);
            os << "L(" << render(p.spec) << "; lambda=" << p.lambda.str() << "; a=" << p.a.str()
               << "; b=" << p.b.str() << ")";
            break;
        }
        case Family::N: {
            const auto& p = std::get<NParams>(d.params);
            os << "N(" << render(p.spec) << "; a=" << p.a.str() << "; twist=" << p.twist.str()
               << ")";
            break;
        }
        case Family::A: {
            const auto& p = std::get<AParams>(d.params);
            os << "A(a=" << p.a.str() << "; b=" << p.b.str() << ")";
            break;
        }
        case Family::Parity: {
            const auto& p = std::get<ParityParams>(d.params);
            os << "L" << p.index << "(a=" << p.a.str() << "; bprime=" << p.bprime.str() << ")";
            break;
        }
    }
    return os.str();
}

std::string render(const EParams& e) {
    std::ostringstream os;
    os << "E(lambda=" << e.lambda.str() << "; b=" << e.b.str() << "; gamma=" << e.gamma.str()
       << "; p=" << e.p.str() << ")";
    return os.str();
}

}  // namespace virmod
