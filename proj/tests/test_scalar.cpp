/*
   Copyright 2026 The seminorm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch_amalgamated.hpp>
#include <random>

#include "seminorm/scalar.hpp"

using namespace seminorm;

TEST_CASE("prime field construction validates the modulus") {
    CHECK_NOTHROW(FieldTag::prime_field(2));
    CHECK_NOTHROW(FieldTag::prime_field(11));
    CHECK_NOTHROW(FieldTag::prime_field(2147483647));  // 2^31 - 1
    CHECK_THROWS_AS(FieldTag::prime_field(1), ValueError);
    CHECK_THROWS_AS(FieldTag::prime_field(4), ValueError);
    CHECK_THROWS_AS(FieldTag::prime_field(91), ValueError);        // 7 * 13
    CHECK_THROWS_AS(FieldTag::prime_field(1000000016), ValueError);
}

TEST_CASE("rational scalars are canonical") {
    auto QQ = FieldTag::rationals();
    Scalar half = Scalar::from_mpq(QQ, mpq_class(2, 4));
    CHECK(half.rational().get_num() == 1);
    CHECK(half.rational().get_den() == 2);
    Scalar negated = Scalar::from_mpq(QQ, mpq_class(3, -6));
    CHECK(negated.rational().get_den() == 2);  // denominator positive
    CHECK(negated.rational().get_num() == -1);
    CHECK(half.to_string() == "1/2");
}

TEST_CASE("GF residues are reduced") {
    auto F7 = FieldTag::prime_field(7);
    CHECK(Scalar::from_int(F7, 9).residue() == 2);
    CHECK(Scalar::from_int(F7, -1).residue() == 6);
    CHECK(Scalar::from_int(F7, 14).is_zero());
}

TEST_CASE("field axioms hold for random scalars") {
    std::mt19937_64 rng(12345);
    auto QQ = FieldTag::rationals();
    for (int i = 0; i < 50; ++i) {
        long n = static_cast<long>(rng() % 2001) - 1000;
        long d = static_cast<long>(rng() % 999) + 1;
        Scalar a = Scalar::from_mpq(QQ, mpq_class(n, d));
        if (a.is_zero()) continue;
        CHECK((a * a.inverse()).is_one());
        CHECK((a + (-a)).is_zero());
    }
    auto Fp = FieldTag::prime_field(10007);
    for (int i = 0; i < 50; ++i) {
        Scalar a = Scalar::from_int(Fp, static_cast<long long>(rng() % 10007));
        if (a.is_zero()) continue;
        CHECK((a * a.inverse()).is_one());
        CHECK((a - a).is_zero());
    }
    // distributivity on random triples over GF(p)
    for (int i = 0; i < 50; ++i) {
        Scalar a = Scalar::from_int(Fp, static_cast<long long>(rng() % 10007));
        Scalar b = Scalar::from_int(Fp, static_cast<long long>(rng() % 10007));
        Scalar c = Scalar::from_int(Fp, static_cast<long long>(rng() % 10007));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("mixed-field arithmetic is rejected") {
    auto QQ = FieldTag::rationals();
    auto F5 = FieldTag::prime_field(5);
    Scalar a = Scalar::one(QQ), b = Scalar::one(F5);
    CHECK_THROWS_AS(a + b, ValueError);
}

TEST_CASE("division by the characteristic is rejected in GF") {
    auto F5 = FieldTag::prime_field(5);
    CHECK_THROWS_AS(Scalar::from_mpq(F5, mpq_class(1, 5)), ValueError);
    CHECK(Scalar::from_mpq(F5, mpq_class(1, 2)).residue() == 3);  // 2 * 3 = 6 = 1
}
