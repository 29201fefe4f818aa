#include <gtest/gtest.h>

#include "swh/error.hpp"
#include "swh_cli/parse.hpp"

namespace swh::cli {
namespace {

TEST(ParseTest, IntLists) {
  EXPECT_EQ(parse_int_list("2,3,10"), (std::vector<int>{2, 3, 10}));
  EXPECT_EQ(parse_int_list("7"), (std::vector<int>{7}));
  EXPECT_THROW(parse_int_list(""), PreconditionError);
  EXPECT_THROW(parse_int_list("2,,3"), PreconditionError);
  EXPECT_THROW(parse_int_list("2,x"), PreconditionError);
  EXPECT_THROW(parse_int_list("2,"), PreconditionError);
}

TEST(ParseTest, RealRanges) {
  const std::vector<double> r = parse_real_list("0.1:0.9:0.1");
  ASSERT_EQ(r.size(), 9u);
  EXPECT_EQ(r.front(), 0.1);
  EXPECT_EQ(r[2], 0.3);
  EXPECT_EQ(r.back(), 0.9);
  EXPECT_EQ(parse_real_list("0.5,0.63"), (std::vector<double>{0.5, 0.63}));
  EXPECT_EQ(parse_real_list("0.2:0.3:0.1,0.63").size(), 3u);
  EXPECT_THROW(parse_real_list("0.1:0.9"), PreconditionError);
  EXPECT_THROW(parse_real_list("0.9:0.1:0.1"), PreconditionError);
  EXPECT_THROW(parse_real_list("0.1:0.9:0"), PreconditionError);
}

}  // namespace
}  // namespace swh::cli
