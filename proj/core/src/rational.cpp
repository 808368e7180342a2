// Copyright 2026 The tdcolor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdc/rational.hpp"

#include <numeric>
#include <ostream>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

using I128 = __int128;

std::int64_t narrow(I128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw InternalCheckFailure("rational overflow past 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

I128 gcd128(I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw PreconditionError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational& Rational::operator+=(const Rational& o) {
    I128 n = I128(num_) * o.den_ + I128(o.num_) * den_;
    I128 d = I128(den_) * o.den_;
    I128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    I128 n = I128(num_) * o.num_;
    I128 d = I128(den_) * o.den_;
    I128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw PreconditionError("division by zero rational");
    return *this *= Rational(o.den_, o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return I128(a.num_) * b.den_ < I128(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tdc
