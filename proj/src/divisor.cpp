#include "gcover/divisor.hpp"

#include "gcover/errors.hpp"

#include <sstream>

namespace gcover {

BasisLabel BasisLabel::fine(int i, std::string h1, std::string h2, std::string node) {
    BasisLabel l;
    l.kind = Kind::fine;
    l.i = i;
    l.h1 = std::move(h1);
    l.h2 = std::move(h2);
    l.node = std::move(node);
    return l;
}

std::string BasisLabel::to_string() const {
    switch (kind) {
        case Kind::lambda: return "lambda";
        case Kind::kappa1: return "kappa1";
        case Kind::delta_base: return "delta_base_" + std::to_string(i);
        case Kind::delta_prime: return "delta_prime_" + std::to_string(i);
        case Kind::delta_0_c2: return "delta_0_c2";
        case Kind::delta_0_c3: return "delta_0_c3";
        case Kind::delta_i_c3: return "delta_" + std::to_string(i) + "_c3";
        case Kind::fine: {
            std::string s = "delta_" + std::to_string(i);
            if (node != "1") s += "_" + node;
            return s + "[" + h1 + "," + h2 + "]";
        }
    }
    return "?";
}

BasisLabel BasisLabel::from_string(const std::string& s) {
    if (s == "lambda") return lambda();
    if (s == "kappa1") return kappa1();
    if (s == "delta_0_c2") return delta_0_c2();
    if (s == "delta_0_c3") return delta_0_c3();
    auto starts = [&](const std::string& p) { return s.rfind(p, 0) == 0; };
    if (starts("delta_base_")) return delta_base(std::stoi(s.substr(11)));
    if (starts("delta_prime_")) return delta_prime(std::stoi(s.substr(12)));
    if (starts("delta_") && s.find('[') == std::string::npos && s.size() > 9 &&
        s.substr(s.size() - 3) == "_c3")
        return delta_i_c3(std::stoi(s.substr(6, s.size() - 9)));
    if (starts("delta_") && s.find('[') != std::string::npos) {
        auto lb = s.find('['), comma = s.find(','), rb = s.find(']');
        std::string head = s.substr(6, lb - 6);  // "<i>" or "<i>_<node>"
        int i;
        std::string node = "1";
        if (auto us = head.find('_'); us != std::string::npos) {
            i = std::stoi(head.substr(0, us));
            node = head.substr(us + 1);
        } else {
            i = std::stoi(head);
        }
        return fine(i, s.substr(lb + 1, comma - lb - 1), s.substr(comma + 1, rb - comma - 1), node);
    }
    throw GcError(errc::usage, "unknown basis label '" + s + "'");
}

Rat DivisorClass::coeff(const BasisLabel& l) const {
    auto it = coeffs_.find(l);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

DivisorClass& DivisorClass::set(const BasisLabel& l, const Rat& c) {
    if (c == 0)
        coeffs_.erase(l);
    else
        coeffs_[l] = c;
    return *this;
}

DivisorClass& DivisorClass::add(const BasisLabel& l, const Rat& c) {
    return set(l, coeff(l) + c);
}

void DivisorClass::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (genus_ != o.genus_)
        throw GcError(errc::genus_mismatch,
                      "cannot combine classes of genus " + std::to_string(genus_) + " and " +
                          std::to_string(o.genus_));
    for (const auto& [l, c] : o.coeffs_) add(l, c);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    DivisorClass neg = o;
    neg *= Rat(-1);
    return *this += neg;
}

DivisorClass& DivisorClass::operator*=(const Rat& s) {
    for (auto& [l, c] : coeffs_) c *= s;
    prune();
    return *this;
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    return genus_ == o.genus_ && coeffs_ == o.coeffs_;
}

bool DivisorClass::is_zero() const { return coeffs_.empty(); }

bool DivisorClass::is_effective() const {
    for (const auto& [l, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

nlohmann::json DivisorClass::to_json() const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [l, c] : coeffs_) coeffs[l.to_string()] = rat_to_string(c);
    return {{"genus", genus_}, {"coeffs", coeffs}};
}

DivisorClass DivisorClass::from_json(const nlohmann::json& j) {
    DivisorClass d(j.at("genus").get<int>());
    for (const auto& [k, v] : j.at("coeffs").items())
        d.set(BasisLabel::from_string(k), rat_from_string(v.get<std::string>()));
    return d;
}

DivisorClass pullback_delta(int i, int g) {
    if (i < 0 || i > g / 2)
        throw GcError(errc::index_out_of_range,
                      "delta_" + std::to_string(i) + " does not exist at genus " + std::to_string(g));
    DivisorClass d(g);
    if (i == 0) {
        d.set(BasisLabel::delta_prime(0), 1);
        d.set(BasisLabel::delta_0_c2(), 2);
        d.set(BasisLabel::delta_0_c3(), 3);
    } else {
        d.set(BasisLabel::delta_prime(i), 1);
        d.set(BasisLabel::delta_i_c3(i), 3);
    }
    return d;
}

DivisorClass pullback(const DivisorClass& downstairs) {
    DivisorClass up(downstairs.genus());
    for (const auto& [l, c] : downstairs.coeffs()) {
        switch (l.kind) {
            case BasisLabel::Kind::lambda:
                up.add(BasisLabel::lambda(), c);
                break;
            case BasisLabel::Kind::kappa1:
                up.add(BasisLabel::kappa1(), c);
                break;
            case BasisLabel::Kind::delta_base:
                up += c * pullback_delta(l.i, downstairs.genus());
                break;
            default:
                throw GcError(errc::usage,
                              "pullback applies to downstairs classes; got " + l.to_string());
        }
    }
    return up;
}

DivisorClass ramification_divisor(int g) {
    if (g < 2) throw GcError(errc::index_out_of_range, "genus must be >= 2");
    DivisorClass r(g);
    r.set(BasisLabel::delta_0_c2(), 1);
    r.set(BasisLabel::delta_0_c3(), 2);
    for (int i = 1; i <= g / 2; ++i) r.set(BasisLabel::delta_i_c3(i), 2);
    return r;
}

DivisorClass canonical_class(int g) {
    if (g < 2) throw GcError(errc::index_out_of_range, "genus must be >= 2");
    // Hurwitz route: pullback of K_{M_g-bar} = 13 lambda - 2 delta_0 -
    // 3 delta_1 - 2 delta_2 - ... plus the ramification divisor.
    DivisorClass down(g);
    down.set(BasisLabel::lambda(), 13);
    for (int i = 0; i <= g / 2; ++i)
        down.set(BasisLabel::delta_base(i), i == 1 ? -3 : -2);
    DivisorClass k = pullback(down) + ramification_divisor(g);

    // Stated closed form.
    DivisorClass closed(g);
    closed.set(BasisLabel::lambda(), 13);
    closed.set(BasisLabel::delta_prime(0), -2);
    closed.set(BasisLabel::delta_0_c2(), -3);
    closed.set(BasisLabel::delta_0_c3(), -4);
    if (g / 2 >= 1) {
        closed.set(BasisLabel::delta_prime(1), -3);
        closed.set(BasisLabel::delta_i_c3(1), -7);
    }
    for (int i = 2; i <= g / 2; ++i) {
        closed.set(BasisLabel::delta_prime(i), -2);
        closed.set(BasisLabel::delta_i_c3(i), -4);
    }
    if (!(k == closed))
        throw GcError(errc::internal_mismatch,
                      "canonical class derivations disagree at genus " + std::to_string(g));
    return k;
}

DivisorClass kappa1_substitution(const DivisorClass& c) {
    Rat k = c.coeff(BasisLabel::kappa1());
    if (k == 0) return c;
    DivisorClass out = c;
    out.set(BasisLabel::kappa1(), 0);
    out.add(BasisLabel::lambda(), 12 * k);
    out.add(BasisLabel::delta_prime(0), -k);
    out.add(BasisLabel::delta_0_c2(), -2 * k);
    out.add(BasisLabel::delta_0_c3(), -3 * k);
    return out;
}

DivisorClass aggregate_fine(const DivisorClass& c) {
    DivisorClass out(c.genus());
    for (const auto& [l, v] : c.coeffs()) {
        if (l.kind != BasisLabel::Kind::fine) {
            out.add(l, v);
            continue;
        }
        if (l.node == "1")
            out.add(BasisLabel::delta_prime(l.i), v);
        else if (l.node == "c2" && l.i == 0)
            out.add(BasisLabel::delta_0_c2(), v);
        else if (l.node == "c3" && l.i == 0)
            out.add(BasisLabel::delta_0_c3(), v);
        else if (l.node == "c3")
            out.add(BasisLabel::delta_i_c3(l.i), v);
        else
            throw GcError(errc::usage, "no coarse aggregate for " + l.to_string());
    }
    return out;
}

}  // namespace gcover
