#include "retailfail/dataset.hpp"

namespace retailfail {

namespace {

// chain, year, fail, revenue, cost of revenue, SGA, EBITDA, stores,
// interest rate, inflation rate, long-term debt, pandemic, ACSI
std::vector<FirmYearRecord> embedded_records() {
  return {
      {"Bed Bath & Beyond", 2015, 0, 12104, 7484, 3205, 1689, 1513, 2.1, 0.12, 1500, 0, 75},
      {"Bed Bath & Beyond", 2016, 0, 12216, 7639, 3441, 1426, 1530, 1.8, 1.26, 1492, 0, 79},
      {"Bed Bath & Beyond", 2017, 0, 12349, 7906, 3682, 1074, 1546, 2.3, 2.13, 1492, 0, 76},
      {"Bed Bath & Beyond", 2018, 0, 12029, 7925, 3681, 251.69, 1552, 2.9, 2.44, 1488, 0, 79},
      {"Bed Bath & Beyond", 2019, 0, 11159, 7617, 3732, -357.55, 1533, 2.1, 1.81, 1488, 0, 80},
      {"Bed Bath & Beyond", 2020, 0, 9233, 6115, 3224, 81.06, 1500, 0.9, 1.23, 1488, 1, 79},
      {"Bed Bath & Beyond", 2021, 0, 7868, 5384, 2692, -114.33, 1020, 1.5, 4.7, 1190, 1, 80},
      {"Bed Bath & Beyond", 2022, 1, 5345, 4130, 2373, -2992.29, 953, 3, 8, 1180, 1, 78},
      {"Rite Aid", 2013, 0, 25526, 18203, 6561, 1079, 4570, 2.4, 1.62, 5708, 0, 74},
      {"Rite Aid", 2014, 0, 26528, 18952, 6696, 1241, 4623, 2.5, 1.46, 5459, 0, 78},
      {"Rite Aid", 2015, 0, 20770, 15778, 4581, 762.24, 4561, 2.1, 0.12, 6967, 0, 69},
      {"Rite Aid", 2016, 0, 22928, 17863, 4777, 655.92, 4536, 1.8, 1.26, 3273, 0, 78},
      {"Rite Aid", 2017, 0, 21529, 16749, 4651, 1838, 2550, 2.3, 2.13, 3371, 0, 77},
      {"Rite Aid", 2018, 0, 21640, 16963, 4592, 240.87, 2469, 2.9, 2.44, 3479, 0, 76},
      {"Rite Aid", 2019, 0, 21928, 17202, 4587, 493.37, 2461, 2.1, 1.81, 5807, 0, 75},
      {"Rite Aid", 2020, 0, 24043, 19339, 4657, 417.45, 2510, 0.9, 1.23, 5909, 1, 72},
      {"Rite Aid", 2021, 0, 24568, 19462, 5034, -54.97, 2450, 1.5, 4.7, 5345, 1, 71},
      {"Rite Aid", 2022, 1, 24092, 19288, 4902, -255.42, 2450, 3, 8, 5311, 1, 80},
      {"Sears Holdings", 2013, 0, 36188, 27433, 9384, -487, 2429, 2.4, 1.62, 2531, 0, 77},
      {"Sears Holdings", 2014, 0, 31198, 24049, 8220, -718, 1725, 2.5, 1.46, 2878, 0, 73},
      {"Sears Holdings", 2015, 0, 25146, 19336, 6857, -836, 1672, 2.1, 0.12, 1971, 0, 71},
      {"Sears Holdings", 2016, 0, 22138, 15184, 6109, -808, 1430, 1.8, 1.26, 3470, 0, 77},
      {"Sears Holdings", 2017, 0, 16702, 11349, 5139, -562, 1002, 2.3, 2.13, 2199, 0, 73},
      {"Sears Holdings", 2018, 1, 6709, 5899, 2626, -571, 332, 2.9, 2.44, 2239, 0, 73},
      {"JC Penney", 2013, 0, 11859, 8367, 4114, -819, 1094, 2.4, 1.62, 4839, 0, 79},
      {"JC Penney", 2014, 0, 12257, 7996, 3993, 323, 1062, 2.5, 1.46, 5227, 0, 77},
      {"JC Penney", 2015, 0, 12625, 8074, 3775, 654, 1021, 2.1, 0.12, 4668, 0, 74},
      {"JC Penney", 2016, 0, 12547, 8071, 3538, 926, 1013, 1.8, 1.26, 4339, 0, 82},
      {"JC Penney", 2017, 0, 12554, 8208, 3845, 935, 872, 2.3, 2.13, 3780, 0, 79},
      {"JC Penney", 2018, 0, 11664, 7870, 3596, 568, 864, 2.9, 2.44, 3716, 0, 77},
      {"JC Penney", 2019, 0, 10716, 7013, 3585, 583, 849, 2.1, 1.81, 3826, 0, 78},
      {"JC Penney", 2020, 1, 1196, 813, 572, -546, 846, 0.9, 1.23, 3574, 1, 76},
  };
}

}  // namespace

const Dataset& embedded_dataset() {
  static const Dataset dataset(embedded_records());
  return dataset;
}

}  // namespace retailfail
