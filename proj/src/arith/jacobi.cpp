#include "locyc/arith/jacobi.hpp"

#include <stdexcept>
#include <utility>

namespace locyc::arith {

namespace {

template <class Int>
int jacobi_impl(Int a, Int n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int sign = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

}  // namespace

int jacobi(std::int64_t a, std::int64_t n) { return jacobi_impl<std::int64_t>(a, n); }

int jacobi(const BigInt& a, const BigInt& n) { return jacobi_impl<BigInt>(a, n); }

}  // namespace locyc::arith
