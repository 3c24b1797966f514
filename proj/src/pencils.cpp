#include "gcover/pencils.hpp"

#include "gcover/errors.hpp"

namespace gcover {

const char* pencil_name(PencilKind k) {
    switch (k) {
        case PencilKind::B_i: return "B_i";
        case PencilKind::A_i_TN: return "A_i_TN";
        case PencilKind::A_i_c3: return "A_i_c3";
    }
    return "?";
}

PencilIntersection pencil_numbers(PencilKind kind, int i) {
    if (i < 1) throw GcError(errc::index_out_of_range, "pencil index must be >= 1");
    PencilIntersection p;
    p.pencil = kind;
    p.i = i;
    p.k3_caveat = (i == 10);

    const Int two_2i = int_pow(2, static_cast<unsigned long>(2 * i));          // 2^(2i)
    const Int two_2im1 = int_pow(2, static_cast<unsigned long>(2 * i - 1));    // 2^(2i-1)
    const Rat six_i_18 = rat(6 * i + 18);

    switch (kind) {
        case PencilKind::B_i:
            p.numbers[BasisLabel::lambda()] = rat(i + 1);
            p.numbers[BasisLabel::delta_base(0)] = six_i_18;
            p.numbers[BasisLabel::delta_base(i)] = rat(-1);
            break;
        case PencilKind::A_i_TN: {
            Rat deg = rat(two_2i - 1, Int(1));  // covers over the generic fiber
            p.numbers[BasisLabel::lambda()] = deg * rat(i + 1);
            p.numbers[BasisLabel::delta_prime(0)] = rat(two_2im1 + 1, Int(1)) * six_i_18;
            p.numbers[BasisLabel::delta_0_c2()] = rat(two_2im1 - 2, Int(1)) * six_i_18;
            p.numbers[BasisLabel::delta_0_c3()] = 0;
            p.numbers[BasisLabel::delta_prime(i)] = -deg;
            p.numbers[BasisLabel::delta_i_c3(i)] = 0;
            break;
        }
        case PencilKind::A_i_c3:
            p.per_unit_degree = true;
            p.numbers[BasisLabel::lambda()] = rat(i + 1);
            p.numbers[BasisLabel::delta_i_c3(i)] = rat(-1);
            // Individual delta_0-side numbers are not pinned; only the
            // total against pi^* delta_0 is.
            p.delta0_total = six_i_18;
            break;
    }
    return p;
}

Rat min_b_prime(int i, const Rat& a, const Rat& b0p, const Rat& b0c2) {
    if (i < 1) throw GcError(errc::index_out_of_range, "i must be >= 1");
    const Int two_2i = int_pow(2, static_cast<unsigned long>(2 * i));
    const Int two_2im1 = int_pow(2, static_cast<unsigned long>(2 * i - 1));
    Rat num = (rat(two_2im1 + 1, Int(1)) * b0p + rat(two_2im1 - 2, Int(1)) * b0c2) * rat(6 * i + 18);
    return num / rat(two_2i - 1, Int(1)) - rat(i + 1) * a;
}

Rat min_b_c3(int i, const Rat& a) {
    if (i < 1) throw GcError(errc::index_out_of_range, "i must be >= 1");
    Rat bound = rat(5, 2) * rat(6 * i + 18) - rat(i + 1) * a;
    if (a <= 13 && !(bound > 7))
        throw GcError(errc::internal_mismatch,
                      "min_b_c3 bound failed to exceed 7 with a <= 13 at i = " + std::to_string(i));
    return bound;
}

}  // namespace gcover
