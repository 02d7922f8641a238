#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "tanaka/catalog.hpp"

using namespace tanaka;

TEST(Catalog, SortedAndValid) {
  const auto cat = builtin_catalog();
  EXPECT_TRUE(std::is_sorted(cat.begin(), cat.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (const auto& m : cat) {
    EXPECT_NO_THROW(validate_model(m)) << m.id;
    EXPECT_FALSE(m.note.empty()) << m.id;
    if (!m.explicit_L && m.expect_nondegenerate) {
      EXPECT_EQ(m.weights.back(), min_length_for_codim(m.k)) << m.id;
    }
  }
}

TEST(Catalog, HeisenbergEntry) {
  const auto cat = builtin_catalog();
  const auto& h = find_model(cat, "heisenberg");
  EXPECT_EQ(h.k, 1);
  EXPECT_NE(h.note.find("2i z conj(z)"), std::string::npos);
  EXPECT_THROW(find_model(cat, "missing"), std::out_of_range);
}

TEST(Catalog, JsonRoundTrip) {
  const auto cat = builtin_catalog();
  const auto back = catalog_from_json(nlohmann::json::parse(catalog_to_json(cat).dump()));
  ASSERT_EQ(back.size(), cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(back[i].id, cat[i].id);
    EXPECT_EQ(back[i].phi, cat[i].phi);
    EXPECT_EQ(back[i].weights, cat[i].weights);
    EXPECT_EQ(back[i].explicit_L, cat[i].explicit_L);
    EXPECT_EQ(back[i].expect_nondegenerate, cat[i].expect_nondegenerate);
  }
}

TEST(Catalog, LoadFromFile) {
  const std::string path = ::testing::TempDir() + "catalog_test.json";
  {
    std::ofstream out(path);
    out << catalog_to_json(builtin_catalog()).dump(2);
  }
  EXPECT_EQ(load_catalog(path).size(), builtin_catalog().size());
  std::remove(path.c_str());
  EXPECT_THROW(load_catalog(path), std::invalid_argument);
}

TEST(Catalog, ShippedFileMatchesBuiltin) {
  const auto shipped = load_catalog(TANAKA_DATA_DIR "/catalog.json");
  EXPECT_EQ(catalog_to_json(shipped), catalog_to_json(builtin_catalog()));
}
