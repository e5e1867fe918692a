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

#ifndef FNL_NUMKIT_RATIONAL_H
#define FNL_NUMKIT_RATIONAL_H

#include <gmpxx.h>

#include <optional>
#include <string>

namespace fnl {

/// Arbitrary-precision rational. GMP keeps results of arithmetic in lowest
/// terms with a positive denominator; values built from a raw numerator and
/// denominator must go through make_rational.
using BigRational = mpq_class;

BigRational make_rational(long num, long den);

/// "num/den" in lowest terms, always with an explicit denominator ("0/1", "3/1").
std::string to_fraction_string(const BigRational &q);

/// Parses "p/q", "p" or a finite decimal such as "0.125". Throws ValidationError.
BigRational parse_rational(const std::string &text);

/// Nearest rational with denominator ≤ max_den, if it lies within tol of x.
std::optional<BigRational> snap_to_rational(double x, long max_den, double tol);

inline double to_double(const BigRational &q) { return q.get_d(); }
inline double to_double(double x) { return x; }

}  // namespace fnl

#endif
