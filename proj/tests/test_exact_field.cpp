/*
   Copyright 2026 The bicanon Authors

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

#include <gtest/gtest.h>

#include <bicanon/cyclotomic.hpp>

using bicanon::FieldElem;
using bicanon::Rational;

namespace {

FieldElem q(long p, long d = 1) { return FieldElem(Rational(p, d)); }

} // namespace

TEST(Rational, ReducedForm) {
    const Rational r(6, -4);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 5).to_string(), "0");
    EXPECT_EQ(Rational(0, 5).denominator(), 1);
    EXPECT_THROW(Rational(1, 0), bicanon::division_by_zero);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_THROW(Rational::parse("1/0"), bicanon::error);
    EXPECT_THROW(Rational::parse("x"), bicanon::parse_error);
    EXPECT_THROW(Rational::parse(""), bicanon::parse_error);
}

TEST(Rational, ExactSquareRoot) {
    EXPECT_EQ(Rational(9, 4).sqrt_exact(), Rational(3, 2));
    EXPECT_FALSE(Rational(2).sqrt_exact());
    EXPECT_FALSE(Rational(-4).sqrt_exact());
}

TEST(FieldElem, Addition) {
    EXPECT_TRUE((FieldElem::zeta() + (-FieldElem::zeta())).is_zero());
    EXPECT_EQ(q(1, 2) + q(1, 3), FieldElem(FieldElem::Coords{Rational(5, 6), 0, 0, 0}));
    EXPECT_EQ(FieldElem::imag() + FieldElem::imag(), FieldElem(FieldElem::Coords{0, 0, 2, 0}));
}

TEST(FieldElem, Multiplication) {
    const FieldElem z = FieldElem::zeta();
    EXPECT_EQ(z * z.pow(3), q(-1));
    EXPECT_EQ(FieldElem::imag() * FieldElem::imag(), q(-1));
    const FieldElem s = z - z.pow(3);
    EXPECT_EQ(s * s, q(2));
    EXPECT_EQ(FieldElem::sqrt2(), s);
}

TEST(FieldElem, ZetaIdentities) {
    const FieldElem z = FieldElem::zeta();
    EXPECT_EQ(z.pow(8), q(1));
    EXPECT_EQ(z.pow(4), q(-1));
    EXPECT_EQ(FieldElem::imag().pow(2), q(-1));
    // zeta = (1 + i) / sqrt 2
    EXPECT_EQ(z, (q(1) + FieldElem::imag()) / FieldElem::sqrt2());
    for (long k = -9; k <= 9; ++k) EXPECT_EQ(FieldElem::zeta_pow(k), z.pow(k));
}

TEST(FieldElem, Inverse) {
    const FieldElem z = FieldElem::zeta();
    EXPECT_EQ(z.inverse(), -z.pow(3));
    EXPECT_EQ(q(1).inverse(), q(1));
    EXPECT_EQ(q(2).inverse(), q(1, 2));
    EXPECT_THROW(FieldElem().inverse(), bicanon::division_by_zero);
    EXPECT_THROW(q(1) / FieldElem(), bicanon::division_by_zero);
    EXPECT_THROW(FieldElem().pow(-1), bicanon::division_by_zero);
}

TEST(FieldElem, RootOfUnityOrder) {
    EXPECT_EQ(root_of_unity_order(FieldElem::zeta()), 8);
    EXPECT_EQ(root_of_unity_order(-FieldElem::imag()), 4);
    EXPECT_EQ(root_of_unity_order(q(-1)), 2);
    EXPECT_EQ(root_of_unity_order(q(1)), 1);
    EXPECT_FALSE(root_of_unity_order(q(2)));
    EXPECT_FALSE(root_of_unity_order(FieldElem()));
    EXPECT_FALSE(root_of_unity_order(q(1) + FieldElem::imag()));
}

TEST(FieldElem, SquareRoot) {
    auto r = q(-1).sqrt();
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, q(-1));
    r = FieldElem::imag().sqrt();
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, FieldElem::imag());
    r = q(2).sqrt();
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, q(2));
    r = q(-2).sqrt();
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, q(-2));
    EXPECT_FALSE(q(3).sqrt());
    EXPECT_FALSE(FieldElem::zeta().sqrt());
}

TEST(FieldElem, EncodeDecode) {
    const FieldElem x(FieldElem::Coords{Rational(1, 2), -3, 0, Rational(-5, 7)});
    EXPECT_EQ(x.encode(), "1/2,-3,0,-5/7");
    EXPECT_EQ(FieldElem::decode(x.encode()), x);
    EXPECT_EQ(FieldElem::decode(" 0 , 0 , 1 , 0 "), FieldElem::imag());
    EXPECT_THROW(FieldElem::decode("1,2,3"), bicanon::parse_error);
    EXPECT_THROW(FieldElem::decode("1,2,3,4,5"), bicanon::parse_error);
    EXPECT_THROW(FieldElem::decode("1,a,3,4"), bicanon::parse_error);
}

TEST(FieldElem, Expression) {
    EXPECT_EQ(FieldElem().to_expression(), "0");
    EXPECT_EQ((-FieldElem::imag()).to_expression(), "-zeta8^2");
    EXPECT_EQ((q(1) - FieldElem::imag()).to_expression(), "1 - zeta8^2");
}
