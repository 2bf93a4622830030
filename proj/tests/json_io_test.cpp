#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "qdc/errors.hpp"
#include "qdc/json_io.hpp"
#include "test_support.hpp"

namespace qdc {
namespace {

TEST(JsonIo, DocumentedExample) {
  const Json j = parse_json_text(R"({"n": 1, "k": 2, "terms": [{"idx": [0,1], "coeff": [{"exps": [0,0,0,0], "c": "1"}]}]})");
  const Form f = form_from_json(j);
  EXPECT_EQ(f, basis_form(1, {0, 1}));
  EXPECT_EQ(form_to_json(f), j);
}

TEST(JsonIo, FormRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const int k = static_cast<int>(rng() % (4 * n + 1));
    const Form f = testing::random_form(rng, n, k, 3);
    const Json j = form_to_json(f);
    EXPECT_EQ(form_from_json(j), f);
    EXPECT_EQ(form_from_json(parse_json_text(j.dump())), f);
    EXPECT_EQ(form_to_json(form_from_json(j)).dump(), j.dump());
  }
}

TEST(JsonIo, QFunctionRoundTrip) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    QFunction f{2, {}};
    for (Poly& p : f.components) p = testing::random_poly(rng, 8, 3);
    const Json j = qfunction_to_json(f);
    EXPECT_EQ(qfunction_from_json(parse_json_text(j.dump())), f);
  }
}

TEST(JsonIo, UnsortedIndicesFoldSign) {
  const Form f = form_from_json(
      parse_json_text(R"({"n":1,"k":2,"terms":[{"idx":[3,1],"coeff":[{"exps":[1,0,0,0],"c":"2/3"}]}]})"));
  Form expected(1, 2);
  expected.add_term(MultiIndex{1, 3}, Poly::variable(0) * Rational(-2, 3));
  EXPECT_EQ(f, expected);
  const Form zero =
      form_from_json(parse_json_text(R"({"n":1,"k":2,"terms":[{"idx":[2,2],"coeff":[{"exps":[0,0,0,0],"c":"1"}]}]})"));
  EXPECT_TRUE(zero.is_zero());
}

void expect_input_error(const std::string& text, const std::string& fragment) {
  try {
    form_from_json(parse_json_text(text));
    ADD_FAILURE() << "accepted " << text;
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(JsonIo, MalformedFormsNameTheLocation) {
  expect_input_error(R"({"k":1,"terms":[]})", "missing \"n\"");
  expect_input_error(R"({"n":1,"k":5,"terms":[]})", "k: value 5");
  expect_input_error(R"({"n":1,"k":1,"terms":[{"idx":[0,1],"coeff":[]}]})", "terms[0].idx");
  expect_input_error(R"({"n":1,"k":1,"terms":[{"idx":[4],"coeff":[]}]})", "terms[0].idx[0]");
  expect_input_error(R"({"n":1,"k":1,"terms":[{"idx":[0],"coeff":[{"exps":[0,0,0],"c":"1"}]}]})",
                     "terms[0].coeff[0].exps");
  expect_input_error(R"({"n":1,"k":1,"terms":[{"idx":[0],"coeff":[{"exps":[0,0,0,0],"c":"0.5"}]}]})",
                     "terms[0].coeff[0].c");
  expect_input_error(R"({"n":1,"k":1,"terms":[{"idx":[0],"coeff":[{"exps":[0,0,0,0],"c":"1/0"}]}]})",
                     "terms[0].coeff[0].c");
  expect_input_error(R"([1,2])", "expected an object");
  EXPECT_THROW(parse_json_text("{\"n\": 1,"), InputError);
}

TEST(JsonIo, QFunctionNeedsFourComponents) {
  EXPECT_THROW(qfunction_from_json(parse_json_text(R"({"n":1,"components":[[],[],[]]})")), InputError);
}

TEST(JsonIo, ReadsStdinDash) {
  std::istringstream in(R"({"n":1,"k":0,"terms":[]})");
  EXPECT_EQ(form_from_json(read_json_input("-", in)), Form(1, 0));
  EXPECT_THROW(read_json_input("/nonexistent/form.json", in), InputError);
}

}  // namespace
}  // namespace qdc
