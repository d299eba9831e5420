#include "stirconv/multipoly.hpp"

#include <stdexcept>
#include <vector>

namespace stirconv {

const char *var_name(Var v, bool ascii) {
    switch (v) {
    case Var::X:
        return "x";
    case Var::Y:
        return "y";
    case Var::Lambda:
        return ascii ? "L" : "λ";
    case Var::Z:
        return "z";
    }
    return "?";
}

MultiPoly MultiPoly::variable(Var v) {
    Monomial m;
    m[v] = 1;
    return term(Rational(1), m);
}

MultiPoly MultiPoly::term(const Rational &c, const Monomial &m) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

void MultiPoly::add_term(const Monomial &m, const Rational &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int MultiPoly::degree(Var v) const {
    if (terms_.empty())
        return -1;
    int d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m[v]);
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    // Leading term has maximal total degree under the graded order.
    return terms_.begin()->first.degree();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto &[m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
    MultiPoly r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i)
                m.exp[i] = ma.exp[i] + mb.exp[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational &c) const {
    MultiPoly r;
    if (c.is_zero())
        return r;
    for (const auto &[m, coeff] : terms_)
        r.terms_.emplace(m, coeff * c);
    return r;
}

Rational MultiPoly::eval(const std::map<Var, Rational> &assignment) const {
    // Bind and precompute powers only for variables that actually occur.
    std::array<std::vector<Rational>, kNumVars> powers;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        int d = degree(v);
        if (d <= 0)
            continue;
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument(std::string("unbound variable ") + var_name(v, true));
        auto &pw = powers[i];
        pw.resize(static_cast<std::size_t>(d) + 1, Rational(1));
        for (int e = 1; e <= d; ++e)
            pw[e] = pw[e - 1] * it->second;
    }
    Rational sum;
    for (const auto &[m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i)
            if (m.exp[i] > 0)
                t *= powers[i][m.exp[i]];
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly &q) const {
    int d = degree(v);
    if (d <= 0)
        return *this;
    std::vector<MultiPoly> qpow(static_cast<std::size_t>(d) + 1, MultiPoly(1));
    for (int e = 1; e <= d; ++e)
        qpow[e] = qpow[e - 1] * q;

    MultiPoly r;
    for (const auto &[m, c] : terms_) {
        Monomial rest = m;
        int e = rest[v];
        rest[v] = 0;
        r += MultiPoly::term(c, rest) * qpow[e];
    }
    return r;
}

std::string MultiPoly::to_string(bool ascii) const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0)
                out += '-';
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool need_star = false;
        if (m.is_constant() || !(mag == Rational(1))) {
            out += mag.to_string();
            need_star = !m.is_constant();
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (m.exp[i] == 0)
                continue;
            if (need_star)
                out += '*';
            out += var_name(static_cast<Var>(i), ascii);
            if (m.exp[i] > 1) {
                out += '^';
                out += std::to_string(m.exp[i]);
            }
            need_star = true;
        }
    }
    return out;
}

} // namespace stirconv
