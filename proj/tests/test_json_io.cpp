#include <gtest/gtest.h>

#include "symcart/json_io.hpp"
#include "symcart/suite.hpp"

using namespace symcart;

namespace {

std::string data(const std::string& f) { return std::string(SYMCART_TEST_DATA) + "/" + f; }

json sl2_doc() {
    return json::parse(R"({"dim": 3, "brackets": [[0, 1, 2, -2], [0, 2, 1, 2], [1, 2, 0, 2]],
                           "sigma": [[1, 0, 0], [0, -1, 0], [0, 0, -1]], "cartan": [[0, 1, 0]]})");
}

std::string identity_of(const json& doc) {
    try {
        pair_from_json(doc);
    } catch (const ValidationError& e) {
        return e.identity();
    } catch (const InputError& e) {
        return std::string("input: ") + e.what();
    }
    return "";
}

}  // namespace

TEST(PairDocument, KillingFormDefault) {
    SymmetricPair p = pair_from_file(data("sl2_killing.json"));
    EXPECT_EQ(p.name, "sl2-killing");
    EXPECT_EQ(p.kappa, killing_form(p.algebra));
    EXPECT_EQ(p.kappa(1, 1), Scalar(8));  // Killing form of sl2 is 4 tr(XY)
    PairContext c = analyze(p);
    EXPECT_EQ(c.roots.size(), 2u);
    EXPECT_EQ(c.chart.phi, parse_poly("-4*x0^2", 1));
    EXPECT_EQ(c.chart.gram_constant, Scalar::fraction(-1, 8));
}

TEST(PairDocument, RepresentationGivesTraceForm) {
    SymmetricPair p = pair_from_file(data("sl2_rep.json"));
    ASSERT_TRUE(p.representation);
    EXPECT_EQ(p.kappa(1, 1), Scalar(2));
    PairContext c = analyze(p);
    EXPECT_EQ(c.chart.gram_constant, Scalar::fraction(-1, 2));
    // same algebra as the built-in pair
    PairContext builtin = analyze(make_sl2_so2());
    EXPECT_EQ(c.chart.phi, builtin.chart.phi);
    EXPECT_EQ(c.chart.generators, builtin.chart.generators);
}

TEST(PairDocument, ImpliedAntisymmetricEntries) {
    SymmetricPair p = pair_from_json(sl2_doc());
    EXPECT_EQ(p.algebra.c(1, 0, 2), Scalar(2));
    EXPECT_EQ(p.algebra.c(2, 0, 1), Scalar(-2));
}

TEST(PairDocument, ExplicitKappaAndRationalEntries) {
    json doc = sl2_doc();
    doc["kappa"] = {{"-1/2", 0, 0}, {0, "1/2", 0}, {0, 0, "1/2"}};
    SymmetricPair p = pair_from_json(doc);
    EXPECT_EQ(p.kappa(0, 0), Scalar::fraction(-1, 2));
}

TEST(PairDocument, Diagnostics) {
    json doc = sl2_doc();
    doc["sigma"] = {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
    EXPECT_EQ(identity_of(doc), "sigma-automorphism");

    doc = sl2_doc();
    doc["brackets"].push_back({1, 0, 2, 5});
    EXPECT_EQ(identity_of(doc), "antisymmetry");

    doc = sl2_doc();
    doc["brackets"].push_back({0, 1, 0, 1});
    EXPECT_EQ(identity_of(doc), "jacobi");

    doc = sl2_doc();
    doc["kappa"] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(identity_of(doc), "kappa-invariance");

    doc = sl2_doc();
    doc["cartan"] = {{1, 0, 0}};
    EXPECT_EQ(identity_of(doc), "cartan-in-q");

    doc = sl2_doc();
    doc["cartan"] = {{0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(identity_of(doc), "cartan-abelian");

    doc = sl2_doc();
    doc["cartan"] = {{0, 1, 0}, {0, 2, 0}};
    EXPECT_EQ(identity_of(doc), "cartan-independent");

    doc = sl2_doc();
    doc["rep"] = {{{0, 1}, {1, 0}}, {{1, 0}, {0, -1}}, {{0, 1}, {-1, 0}}};  // e0 and e2 swapped
    EXPECT_EQ(identity_of(doc), "rep-homomorphism");
}

TEST(PairDocument, MalformedDocuments) {
    EXPECT_THROW(pair_from_file(data("malformed.json")), InputError);
    EXPECT_THROW(pair_from_file(data("does_not_exist.json")), InputError);
    json doc = sl2_doc();
    doc.erase("sigma");
    EXPECT_THROW(pair_from_json(doc), InputError);
    doc = sl2_doc();
    doc["brackets"].push_back({0, 1, 7, 1});
    EXPECT_THROW(pair_from_json(doc), InputError);
    doc = sl2_doc();
    doc["brackets"].push_back({0, 1, 2, -2});
    EXPECT_THROW(pair_from_json(doc), InputError);
    doc = sl2_doc();
    doc["sigma"] = {{1, 0}, {0, 1}};
    EXPECT_THROW(pair_from_json(doc), InputError);
    doc = sl2_doc();
    doc["dim"] = -3;
    EXPECT_THROW(pair_from_json(doc), InputError);
    EXPECT_THROW(scalar_from_json(json(1.5)), InputError);
}

TEST(PairDocument, UnsupportedSpectrum) {
    SymmetricPair p = pair_from_file(data("irrational.json"));
    EXPECT_THROW(restricted_roots(p), UnsupportedSpectrum);
}

TEST(Rendering, Values) {
    EXPECT_EQ(to_json(Scalar::fraction(-1, 2)), json("-1/2"));
    EXPECT_EQ(to_json(parse_poly("x0^2 - 3*x1", 2)).get<std::string>(), "x0^2 - 3*x1");
    PairContext c = analyze(make_sl2_so2());
    json r = to_json(c.roots);
    EXPECT_EQ(r["count"], 2);
    EXPECT_EQ(r["roots"][0]["functional"], json::array({"-2"}));
    CheckReport rep;
    rep.add("a", true, "fine");
    EXPECT_EQ(to_json(rep)["pass"], true);
    rep.add("b", false, "broken");
    EXPECT_EQ(to_json(rep)["pass"], false);
}
