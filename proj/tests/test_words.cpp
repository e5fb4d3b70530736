#include <catch2/catch_amalgamated.hpp>

#include "hessdyn/ratmap.hpp"
#include "hessdyn/words.hpp"

using namespace hessdyn;

TEST_CASE("normal form splits runs of h between the degree-9 letters", "[words]") {
  CHECK(normal_form(Word("chchhc")).exponents == std::vector<long>{0, 1, 2, 0});
  CHECK(normal_form(Word("hhh")).exponents == std::vector<long>{3});
  CHECK(normal_form(Word("c")).exponents == std::vector<long>{0, 0});
  CHECK(normal_form(Word("hch")).exponents == std::vector<long>{1, 1});
  for (int len = 1; len <= 6; ++len)
    for (const Word& w : enumerate_words(len)) {
      NormalForm nf = normal_form(w);
      CHECK(nf.count_c() == w.count_c());
      CHECK(nf.count_h() == w.count_h());
      CHECK(word_from_normal_form(nf).letters == w.letters);
    }
}

TEST_CASE("two-letter presentation round trips", "[words]") {
  CHECK(to_hi(Word("h")).letters == "h");
  CHECK(to_hi(Word("c")).letters == "hi");
  CHECK(to_hi(Word("cc")).letters == "hihi");
  CHECK(to_hi(Word("ch")).letters == "hih");
  CHECK(to_hi(Word("hc")).letters == "hhi");
  for (int len = 1; len <= 6; ++len)
    for (const Word& w : enumerate_words(len))
      CHECK(from_hi(to_hi(w)).letters == w.letters);
  CHECK_THROWS_AS(from_hi(WordHI("ih")), std::invalid_argument);
  CHECK_THROWS_AS(WordHI("hii"), std::invalid_argument);
  CHECK_THROWS_AS(WordHI("hxh"), std::invalid_argument);
}

TEST_CASE("evaluation is a homomorphism onto maps of degree 3^n", "[words]") {
  CHECK(psi(Word("h")) == canonical_hessian());
  CHECK(psi(Word("c")) == canonical_cayleyan());
  CHECK(psi(Word("hc")).map_degree() == 9);
  CHECK(psi(Word("chch")).map_degree() == 81);

  const Word w("chch");
  for (int cut = 1; cut < w.length(); ++cut) {
    Word u(w.letters.substr(0, static_cast<size_t>(cut)));
    Word v(w.letters.substr(static_cast<size_t>(cut)));
    CHECK(psi(w) == compose(psi(u), psi(v)));
  }
}

TEST_CASE("distinct words of equal leading data give distinct maps", "[words]") {
  const Word a("chchhc");
  const Word b("hhccch");
  LeadingPrediction pa = predicted_leading(a);
  LeadingPrediction pb = predicted_leading(b);
  CHECK(pa.order == 8);
  CHECK(pb.order == 8);
  BigRat expect = pow_ui(make_rat(3, 2), 7) * BigRat(pow_ui(BigInt(3), 10));
  CHECK(pa.magnitude == expect);
  CHECK(pb.magnitude == expect);
  ZMap ma = psi(a);
  ZMap mb = psi(b);
  CHECK(ma.map_degree() == 729);
  CHECK(mb.map_degree() == 729);
  CHECK(ma != mb);
}

TEST_CASE("leading coefficient law at infinity", "[words]") {
  CHECK(predicted_leading(Word("h")).order == 1);
  CHECK(predicted_leading(Word("h")).magnitude == BigRat(3));
  CHECK(predicted_leading(Word("c")).order == 2);
  CHECK(predicted_leading(Word("c")).magnitude == make_rat(3, 2));
  CHECK(predicted_leading(Word("ch")).magnitude == make_rat(27, 2));
  CHECK(predicted_leading(Word("hc")).magnitude == make_rat(9, 2));

  for (int len = 1; len <= 5; ++len)
    for (const Word& w : enumerate_words(len)) {
      LeadingPrediction p = predicted_leading(w);
      ExactTaylor t = taylor_at_infinity(psi(w), 34);
      INFO("word " << w.letters);
      CHECK(t.order == p.order);
      CHECK(BigRat(abs(t.lead)) == p.magnitude);
    }
}

TEST_CASE("radical trajectory detects the first-applied letter", "[words]") {
  CHECK(ends_with_h(WordHI("h")));
  CHECK_FALSE(ends_with_h(WordHI("hi")));
  for (int len = 1; len <= 6; ++len)
    for (const Word& w : enumerate_words(len)) {
      INFO("word " << w.letters);
      CHECK(ends_with_h(to_hi(w)) == (w.letters.back() == 'h'));
    }
}

TEST_CASE("no collisions among words up to length six", "[words]") {
  CollisionReport r3 = collision_scan(3);
  CHECK(r3.words_scanned == 14);
  CHECK(r3.collisions.empty());
  CollisionReport r6 = collision_scan(6);
  CHECK(r6.words_scanned == 126);
  CHECK(r6.collisions.empty());
}
