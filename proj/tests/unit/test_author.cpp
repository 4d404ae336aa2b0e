#include <doctest.h>

#include <uindex/author.hpp>
#include <uindex/errors.hpp>

#include <random>
#include <vector>

using uindex::AuthorRef;
using uindex::normalize_author;
using uindex::same_author;

TEST_CASE("persistent id dominates the key") {
    AuthorRef a{"R. Dillon", "0000-0003-0166-0273"};
    CHECK(normalize_author(a) == "id:0000-0003-0166-0273");
}

TEST_CASE("comma form yields family/initial key") {
    CHECK(normalize_author({"Dillon, Roberto", std::nullopt}) == "name:dillon/r");
}

TEST_CASE("diacritics fold and the last token is the family name") {
    CHECK(normalize_author({"José García López", std::nullopt}) == "name:lopez/j");
}

TEST_CASE("initial-dot form matches the comma form") {
    CHECK(normalize_author({"R. Dillon", std::nullopt}) == "name:dillon/r");
    CHECK(same_author({"Dillon, Roberto", std::nullopt}, {"R. Dillon", std::nullopt}));
}

TEST_CASE("more fold cases") {
    CHECK(normalize_author({"Åsa Løvik", std::nullopt}) == "name:lovik/a");
    CHECK(normalize_author({"Müller, Jürgen", std::nullopt}) == "name:muller/j");
    CHECK(normalize_author({"Chloë Peña", std::nullopt}) == "name:pena/c");
    CHECK(normalize_author({"Łukasz Ćirić", std::nullopt}) == "name:ciric/l");
}

TEST_CASE("single-token name has an empty initial") {
    CHECK(normalize_author({"Aristotle", std::nullopt}) == "name:aristotle/");
}

TEST_CASE("empty display name is a validation error") {
    CHECK_THROWS_AS(normalize_author({"", std::nullopt}), uindex::ValidationError);
    CHECK_THROWS_AS(normalize_author({"   ", std::nullopt}), uindex::ValidationError);
    // even when a persistent id is present
    CHECK_THROWS_AS(normalize_author({" ", std::string("X")}), uindex::ValidationError);
}

TEST_CASE("different persistent ids never match, same names notwithstanding") {
    AuthorRef a{"A. Smith", std::string("X")};
    AuthorRef b{"A. Smith", std::string("Y")};
    CHECK_FALSE(same_author(a, b));
}

TEST_CASE("identical persistent ids match") {
    AuthorRef a{"Alice Smith", std::string("X")};
    AuthorRef b{"Smith, Anything", std::string("X")};
    CHECK(same_author(a, b));
}

TEST_CASE("one-sided persistent id falls back to name comparison") {
    AuthorRef with_pid{"Rivera, Paula", std::string("A1")};
    AuthorRef name_only{"P. Rivera", std::nullopt};
    CHECK(same_author(with_pid, name_only));
    CHECK(same_author(name_only, with_pid));

    AuthorRef other{"Q. Rivera", std::nullopt};
    CHECK_FALSE(same_author(with_pid, other));
}

TEST_CASE("normalize_author is idempotent and pure") {
    const std::vector<AuthorRef> refs = {
        {"Dillon, Roberto", std::nullopt},
        {"José García López", std::nullopt},
        {"R. Dillon", std::string("0000-1")},
        {"Åsa Løvik", std::nullopt},
    };
    for (const auto& r : refs) {
        const auto k1 = normalize_author(r);
        const auto k2 = normalize_author(r);
        CHECK(k1 == k2);
        // feeding the key back through the fold changes nothing
        CHECK(uindex::fold_latin(k1) == k1);
    }
}

TEST_CASE("same_author is reflexive and symmetric on random refs") {
    std::mt19937 rng(7);
    const std::vector<std::string> names = {"Rosa Dillon",  "R. Dillon", "Dillon, Roberto",
                                            "José García",  "A. Smith",  "Garcia, José",
                                            "Müller, Anna", "Å. Peña"};
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::bernoulli_distribution with_pid(0.5);
    auto gen = [&] {
        AuthorRef r{names[pick(rng)], std::nullopt};
        if (with_pid(rng)) r.persistent_id = "A" + std::to_string(pick(rng));
        return r;
    };
    for (int i = 0; i < 500; ++i) {
        const AuthorRef a = gen();
        const AuthorRef b = gen();
        CHECK(same_author(a, a));
        CHECK(same_author(a, b) == same_author(b, a));
    }
}
