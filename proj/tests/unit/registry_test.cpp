#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "donormatch/error.hpp"
#include "donormatch/registry/csv.hpp"
#include "donormatch/registry/eligibility.hpp"
#include "donormatch/registry/synthetic.hpp"
#include "reference_fixtures.hpp"

using namespace donormatch;
using namespace donormatch::registry;

namespace {
const std::string kHeader =
    "id,name,blood_type,age,weight_kg,distance_m,days_since_donation,phone\n";

DonorRecord donor(int age, double weight) {
  return {"d", "D", {}, age, weight, 100, 10, ""};
}
}  // namespace

TEST(BloodType, Parse) {
  EXPECT_EQ(BloodType::parse("AB-"), (BloodType{AboGroup::AB, RhFactor::Negative}));
  EXPECT_EQ(BloodType::parse("o+"), (BloodType{AboGroup::O, RhFactor::Positive}));
  EXPECT_EQ(BloodType::parse("C+"), std::nullopt);
  EXPECT_EQ(BloodType::parse("A"), std::nullopt);
  EXPECT_EQ(BloodType::parse(""), std::nullopt);
  EXPECT_EQ((BloodType{AboGroup::AB, RhFactor::Negative}).to_string(), "AB-");
}

TEST(Csv, FixtureFile) {
  const auto records = ingest_csv(DONORMATCH_FIXTURE_DIR "/reference_donors.csv");
  EXPECT_EQ(records, fixtures::reference_donors());
}

TEST(Csv, QuotedFieldsAndNeverDonated) {
  const auto records = ingest_csv_text(kHeader +
                                       "x1,\"Doe, \"\"JD\"\"\",AB-,25,55.5,300,,\"08\n12\"\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].name, "Doe, \"JD\"");
  EXPECT_EQ(records[0].phone, "08\n12");
  EXPECT_EQ(records[0].days_since_donation, std::nullopt);
}

TEST(Csv, ColumnsInAnyOrder) {
  const auto records = ingest_csv_text(
      "phone,days_since_donation,distance_m,weight_kg,age,blood_type,name,id\n"
      "0812,10,20,60,30,B-,Ana,a1\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].id, "a1");
  EXPECT_EQ(records[0].age, 30);
}

TEST(Csv, ReportsEveryIssue) {
  try {
    ingest_csv_text(kHeader + "a,A,A+,30,60,10,10,\n"
                              "b,B,Q+,-1,60,10,10,\n"
                              "c,C,O+,30,0,10,x,\n"
                              "d,D,O+\n");
    FAIL();
  } catch (const CsvError& e) {
    const auto& is = e.issues();
    ASSERT_EQ(is.size(), 5u);
    EXPECT_EQ(is[0].row, 3u);
    EXPECT_EQ(is[0].column, "blood_type");
    EXPECT_EQ(is[1].column, "age");
    EXPECT_EQ(is[2].row, 4u);
    EXPECT_EQ(is[2].column, "weight_kg");
    EXPECT_EQ(is[3].column, "days_since_donation");
    EXPECT_EQ(is[4].row, 5u);
  }
}

TEST(Csv, MissingColumn) {
  try {
    ingest_csv_text("id,name\n");
    FAIL();
  } catch (const CsvError& e) {
    EXPECT_EQ(e.issues().front().row, 1u);
  }
}

TEST(Csv, DuplicateIds) {
  try {
    ingest_csv_text(kHeader + "a,A,A+,30,60,10,10,\nb,B,A+,30,60,10,10,\na,C,A+,30,60,10,10,\n");
    FAIL();
  } catch (const DuplicateId& e) {
    EXPECT_EQ(e.id(), "a");
    EXPECT_EQ(e.rows(), (std::vector<std::size_t>{2, 4}));
  }
}

TEST(Csv, UnterminatedQuote) { EXPECT_THROW(parse_csv("a,\"b\n"), CsvError); }

TEST(Csv, MissingFile) { EXPECT_THROW(ingest_csv("/nonexistent/x.csv"), IoError); }

TEST(Csv, RoundTrip) {
  auto donors = generate_synthetic({.count = 50, .seed = 3});
  EXPECT_EQ(ingest_labeled_csv_text(to_csv(donors)), donors);
  std::vector<DonorRecord> records;
  for (auto& d : donors) records.push_back(d.record);
  EXPECT_EQ(ingest_csv_text(to_csv(records)), records);
}

TEST(Csv, LabelSpellings) {
  const auto header = kHeader.substr(0, kHeader.size() - 1) + ",label\n";
  const auto d = ingest_labeled_csv_text(header + "a,A,A+,30,60,10,10,,yes\n"
                                                  "b,B,A+,30,60,10,10,,0\n"
                                                  "c,C,A+,30,60,10,10,,Eligible\n");
  EXPECT_TRUE(d[0].eligible);
  EXPECT_FALSE(d[1].eligible);
  EXPECT_TRUE(d[2].eligible);
  EXPECT_THROW(ingest_labeled_csv_text(header + "a,A,A+,30,60,10,10,,maybe\n"), CsvError);
}

TEST(Record, ValidateAndJson) {
  auto r = fixtures::reference_donors()[0];
  EXPECT_NO_THROW(validate(r));
  EXPECT_EQ(record_from_json(to_json(r)), r);
  r.days_since_donation.reset();
  EXPECT_EQ(record_from_json(to_json(r)), r);

  auto bad = r;
  bad.weight_kg = 0;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = r;
  bad.id.clear();
  EXPECT_THROW(validate(bad), ValidationError);
  bad = r;
  bad.days_since_donation = -1;
  EXPECT_THROW(validate(bad), ValidationError);
  EXPECT_THROW(record_from_json(nlohmann::json{{"id", "x"}}), ValidationError);
}

TEST(Record, Attributes) {
  auto r = fixtures::reference_donors()[1];
  auto a = donor_attributes(r);
  EXPECT_EQ(a.at("usia"), 42);
  EXPECT_EQ(a.at("age"), 42);
  EXPECT_EQ(a.at("jarak"), 4835);
  EXPECT_EQ(a.at("waktu_donor"), 158);
  r.days_since_donation.reset();
  EXPECT_EQ(donor_attributes(r).at("time"), kDefaultNeverDonatedDays);
  EXPECT_EQ(donor_attributes(r, 1000).at("time"), 1000);
}

TEST(Eligibility, AgeBoundaries) {
  const EligibilityRule rule;
  EXPECT_EQ(check(donor(16, 60), rule), RejectReason::TooYoung);
  EXPECT_EQ(check(donor(17, 60), rule), std::nullopt);
  EXPECT_EQ(check(donor(60, 60), rule), std::nullopt);
  EXPECT_EQ(check(donor(61, 60), rule), RejectReason::TooOld);
}

TEST(Eligibility, WeightBoundaries) {
  const EligibilityRule rule;
  EXPECT_EQ(check(donor(30, 40.0), rule), RejectReason::Underweight);
  EXPECT_EQ(check(donor(30, 40.1), rule), std::nullopt);
  EXPECT_EQ(check(donor(16, 40.0), rule), RejectReason::TooYoung);
}

TEST(Eligibility, FilterPreservesOrder) {
  std::vector<DonorRecord> rs{donor(30, 60), donor(10, 60), donor(40, 30), donor(20, 50)};
  for (std::size_t i = 0; i < rs.size(); ++i) rs[i].id = std::to_string(i);
  const auto out = hard_filter(rs);
  ASSERT_EQ(out.eligible.size(), 2u);
  EXPECT_EQ(out.eligible[0].id, "0");
  EXPECT_EQ(out.eligible[1].id, "3");
  ASSERT_EQ(out.rejected.size(), 2u);
  EXPECT_EQ(out.rejected[0].reason, RejectReason::TooYoung);
  EXPECT_EQ(out.rejected[1].reason, RejectReason::Underweight);
}

TEST(Eligibility, RuleValidation) {
  EXPECT_THROW((EligibilityRule{60, 17, 40}.validate()), ValidationError);
  EXPECT_THROW((EligibilityRule{17, 60, 0}.validate()), ValidationError);
}

TEST(Synthetic, DeterministicAndInRange) {
  const auto a = generate_synthetic({.count = 500, .seed = 9});
  EXPECT_EQ(a, generate_synthetic({.count = 500, .seed = 9}));
  EXPECT_NE(a, generate_synthetic({.count = 500, .seed = 10}));
  std::size_t never = 0;
  for (const auto& d : a) {
    ASSERT_NO_THROW(validate(d.record));
    EXPECT_GE(d.record.age, 10);
    EXPECT_LE(d.record.age, 75);
    EXPECT_GE(d.record.weight_kg, 30.0);
    EXPECT_LE(d.record.weight_kg, 120.0);
    EXPECT_LE(d.record.distance_m, 15000.0);
    EXPECT_EQ(d.eligible, !check(d.record, EligibilityRule{}).has_value());
    if (!d.record.days_since_donation) ++never;
  }
  EXPECT_GT(never, 0u);
  EXPECT_LT(never, 60u);
}

TEST(Synthetic, NoiseFlipsSomeLabels) {
  const auto clean = generate_synthetic({.count = 1000, .seed = 4});
  const auto noisy = generate_synthetic({.count = 1000, .seed = 4, .noise = 0.2});
  std::size_t flipped = 0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    ASSERT_EQ(clean[i].record, noisy[i].record);
    flipped += clean[i].eligible != noisy[i].eligible;
  }
  EXPECT_GT(flipped, 120u);
  EXPECT_LT(flipped, 280u);
}
