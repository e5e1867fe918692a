// Copyright 2026 The fnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fnl/numkit/rational.h"

#include <cmath>
#include <regex>

#include "fnl/errors.h"

namespace fnl {

BigRational make_rational(long num, long den) {
    if (den == 0) {
        throw ValidationError("make_rational: zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const BigRational &q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string &text) {
    static const std::regex fraction(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
    static const std::regex decimal(R"(^\s*([+-]?)(\d*)\.(\d+)\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, fraction)) {
        std::string num_text = m[1].str();
        if (num_text.front() == '+') {
            num_text.erase(0, 1);
        }
        mpz_class num(num_text, 10);
        mpz_class den(m[2].matched ? m[2].str() : std::string("1"), 10);
        if (den == 0) {
            throw ValidationError("parse_rational: zero denominator in '" + text + "'");
        }
        BigRational q(num, den);
        q.canonicalize();
        return q;
    }
    if (std::regex_match(text, m, decimal)) {
        std::string digits = m[2].str() + m[3].str();
        if (digits.empty()) {
            digits = "0";
        }
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].str().size());
        if (m[1].str() == "-") {
            num = -num;
        }
        BigRational q(num, den);
        q.canonicalize();
        return q;
    }
    throw ValidationError("parse_rational: cannot parse '" + text + "'");
}

std::optional<BigRational> snap_to_rational(double x, long max_den, double tol) {
    if (!std::isfinite(x)) {
        return std::nullopt;
    }
    for (long den = 1; den <= max_den; den++) {
        double num = std::round(x * static_cast<double>(den));
        if (std::abs(x - num / static_cast<double>(den)) <= tol) {
            return make_rational(static_cast<long>(num), den);
        }
    }
    return std::nullopt;
}

}  // namespace fnl
