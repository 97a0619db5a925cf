#include <matchbox/integers.hpp>

#include <stdexcept>

namespace matchbox {

Factorization factor(std::int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("factor: argument must be >= 2");
    }
    Factorization out;
    auto strip = [&](std::int64_t p) {
        std::int64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            out.emplace(p, e);
        }
    };
    strip(2);
    strip(3);
    // remaining factors are of the form 6k +- 1
    for (std::int64_t p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        out.emplace(n, 1);
    }
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    if (n % 3 == 0) {
        return n == 3;
    }
    for (std::int64_t p = 5; p <= n / p; p += 6) {
        if (n % p == 0 || n % (p + 2) == 0) {
            return false;
        }
    }
    return true;
}

Int mod_floor(const Int& x, const Int& m) {
    if (m <= 0) {
        throw std::invalid_argument("mod_floor: modulus must be positive");
    }
    Int r = x % m;  // sign follows x
    if (r < 0) {
        r += m;
    }
    return r;
}

Int div_floor(const Int& a, const Int& b) {
    if (b == 0) {
        throw std::invalid_argument("div_floor: division by zero");
    }
    Int q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

}  // namespace matchbox
