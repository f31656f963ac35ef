#include "typecalc/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "typecalc/io.hpp"

namespace typecalc {

std::string NoteTag::str() const {
  switch (kind) {
    case Kind::kummer: return "kummer";
    case Kind::cube: return "cube";
    case Kind::small_factor: return "small-factor";
    case Kind::seven: return "klein-seven";
    case Kind::fifteen: return "fifteen";
    case Kind::mult_one: return "mult-one";
    case Kind::power:
      return "g^" + std::to_string(k) + " -> #" + std::to_string(target);
  }
  return "?";
}

namespace {

NoteTag parse_note(const nlohmann::json& row) {
  const std::string name = row.at("note").get<std::string>();
  NoteTag tag;
  if (name == "kummer") {
    tag.kind = NoteTag::Kind::kummer;
  } else if (name == "cube") {
    tag.kind = NoteTag::Kind::cube;
  } else if (name == "small-factor") {
    tag.kind = NoteTag::Kind::small_factor;
  } else if (name == "seven") {
    tag.kind = NoteTag::Kind::seven;
  } else if (name == "fifteen") {
    tag.kind = NoteTag::Kind::fifteen;
  } else if (name == "mult-one") {
    tag.kind = NoteTag::Kind::mult_one;
  } else if (name == "power") {
    tag.kind = NoteTag::Kind::power;
    tag.k = row.at("k").get<i64>();
    tag.target = row.at("target").get<int>();
    if (tag.k < 2 || tag.target < 1 || tag.target > 3)
      throw InvalidInput("fixtures: power note needs k >= 2 and target in 1..3");
  } else {
    throw InvalidInput("fixtures: unknown note tag \"" + name + "\"");
  }
  return tag;
}

}  // namespace

Fixtures Fixtures::from_json_text(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  Fixtures f;
  for (const auto& row : doc.at("table1")) {
    Table1Fixture r;
    r.index = row.at("index").get<int>();
    r.n = row.at("n").get<i64>();
    r.display = row.at("type").get<std::string>();
    r.type = parse_type(r.display);
    r.wt = parse_rational(row.at("weight").get<std::string>());
    f.table1.push_back(std::move(r));
  }
  for (const auto& row : doc.at("table2")) {
    Table2Fixture r;
    r.index = row.at("index").get<int>();
    r.n = row.at("n").get<i64>();
    r.display = row.at("type").get<std::string>();
    r.type = parse_type(r.display);
    r.note = parse_note(row);
    f.table2.push_back(std::move(r));
  }
  for (const auto& mono : doc.at("polynomial"))
    f.polynomial.push_back(Monomial::parse(mono.get<std::string>()));
  return f;
}

Fixtures Fixtures::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("fixtures: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

const Fixtures& Fixtures::builtin() {
  static const Fixtures f = from_json_text(builtin_fixture_json());
  return f;
}

const char* builtin_fixture_json() {
  return R"json({
  "table1": [
    {"index": 1,  "n": 2,  "type": "1/2",                    "weight": "1/2"},
    {"index": 2,  "n": 3,  "type": "1/3",                    "weight": "1/3"},
    {"index": 3,  "n": 3,  "type": "2/3",                    "weight": "2/3"},
    {"index": 4,  "n": 4,  "type": "1/4",                    "weight": "1/4"},
    {"index": 5,  "n": 4,  "type": "3/4",                    "weight": "3/4"},
    {"index": 6,  "n": 5,  "type": "1/5, 2/5",               "weight": "3/5"},
    {"index": 7,  "n": 5,  "type": "1/5, 3/5",               "weight": "4/5"},
    {"index": 8,  "n": 6,  "type": "1/6",                    "weight": "1/6"},
    {"index": 9,  "n": 6,  "type": "5/6",                    "weight": "5/6"},
    {"index": 10, "n": 7,  "type": "1/7, 2/7, 3/7",          "weight": "6/7"},
    {"index": 11, "n": 7,  "type": "1/7, 2/7, 4/7",          "weight": "1"},
    {"index": 12, "n": 8,  "type": "1/8, 3/8",               "weight": "1/2"},
    {"index": 13, "n": 8,  "type": "1/8, 5/8",               "weight": "3/4"},
    {"index": 14, "n": 9,  "type": "1/9, 2/9, 4/9",          "weight": "7/9"},
    {"index": 15, "n": 9,  "type": "1/9, 2/9, 5/9",          "weight": "8/9"},
    {"index": 16, "n": 10, "type": "1/10, 3/10",             "weight": "2/5"},
    {"index": 17, "n": 10, "type": "1/10, 7/10",             "weight": "4/5"},
    {"index": 18, "n": 12, "type": "1/12, 5/12",             "weight": "1/2"},
    {"index": 19, "n": 12, "type": "1/12, 7/12",             "weight": "2/3"},
    {"index": 20, "n": 14, "type": "1/14, 3/14, 5/14",       "weight": "9/14"},
    {"index": 21, "n": 14, "type": "1/14, 3/14, 9/14",       "weight": "13/14"},
    {"index": 22, "n": 15, "type": "1/15, 2/15, 4/15, 7/15", "weight": "14/15"},
    {"index": 23, "n": 15, "type": "1/15, 2/15, 4/15, 8/15", "weight": "1"},
    {"index": 24, "n": 16, "type": "1/16, 3/16, 5/16, 7/16", "weight": "1"},
    {"index": 25, "n": 18, "type": "1/18, 5/18, 7/18",       "weight": "13/18"},
    {"index": 26, "n": 18, "type": "1/18, 5/18, 11/18",      "weight": "17/18"},
    {"index": 27, "n": 20, "type": "1/20, 3/20, 7/20, 9/20", "weight": "1"},
    {"index": 28, "n": 24, "type": "1/24, 5/24, 7/24, 11/24","weight": "1"}
  ],
  "table2": [
    {"index": 1,  "n": 2,  "type": "1/2, 1/2",                      "note": "kummer"},
    {"index": 2,  "n": 3,  "type": "1/3, 1/3, 1/3",                 "note": "small-factor"},
    {"index": 3,  "n": 3,  "type": "1/3, 2/3",                      "note": "cube"},
    {"index": 4,  "n": 4,  "type": "1/4, 1/4, 1/4, 1/4",            "note": "small-factor"},
    {"index": 5,  "n": 4,  "type": "1/4, 1/4, 2/4",                 "note": "power", "k": 2,  "target": 1},
    {"index": 6,  "n": 4,  "type": "1/4, 3/4",                      "note": "power", "k": 2,  "target": 1},
    {"index": 7,  "n": 6,  "type": "1/6, 1/6, 1/6, 1/6, 1/6, 1/6",  "note": "small-factor"},
    {"index": 8,  "n": 6,  "type": "1/6, 1/6, 1/6, 1/6, 2/6",       "note": "small-factor"},
    {"index": 9,  "n": 6,  "type": "1/6, 1/6, 1/6, 3/6",            "note": "power", "k": 2,  "target": 2},
    {"index": 10, "n": 6,  "type": "1/6, 1/6, 4/6",                 "note": "power", "k": 3,  "target": 1},
    {"index": 11, "n": 6,  "type": "1/6, 5/6",                      "note": "power", "k": 3,  "target": 1},
    {"index": 12, "n": 6,  "type": "1/6, 2/6, 3/6",                 "note": "power", "k": 3,  "target": 1},
    {"index": 13, "n": 6,  "type": "1/6, 1/6, 2/6, 2/6",            "note": "power", "k": 3,  "target": 1},
    {"index": 14, "n": 7,  "type": "1/7, 2/7, 4/7",                 "note": "seven"},
    {"index": 15, "n": 8,  "type": "1/8, 2/8, 5/8",                 "note": "power", "k": 4,  "target": 1},
    {"index": 16, "n": 8,  "type": "1/8, 3/8, 4/8",                 "note": "power", "k": 4,  "target": 1},
    {"index": 17, "n": 8,  "type": "1/8, 1/8, 3/8, 3/8",            "note": "small-factor"},
    {"index": 18, "n": 8,  "type": "1/8, 2/8, 2/8, 3/8",            "note": "power", "k": 4,  "target": 1},
    {"index": 19, "n": 10, "type": "1/10, 2/10, 3/10, 4/10",        "note": "power", "k": 5,  "target": 1},
    {"index": 20, "n": 12, "type": "4/12, 2/12, 1/12, 5/12",        "note": "power", "k": 6,  "target": 1},
    {"index": 21, "n": 12, "type": "4/12, 3/12, 3/12, 2/12",        "note": "power", "k": 6,  "target": 1},
    {"index": 22, "n": 12, "type": "6/12, 1/12, 5/12",              "note": "power", "k": 6,  "target": 1},
    {"index": 23, "n": 12, "type": "3/12, 3/12, 1/12, 5/12",        "note": "power", "k": 4,  "target": 3},
    {"index": 24, "n": 12, "type": "2/12, 2/12, 2/12, 1/12, 5/12",  "note": "power", "k": 6,  "target": 1},
    {"index": 25, "n": 12, "type": "1/12, 1/12, 5/12, 5/12",        "note": "small-factor"},
    {"index": 26, "n": 12, "type": "4/12, 1/12, 7/12",              "note": "power", "k": 6,  "target": 1},
    {"index": 27, "n": 12, "type": "2/12, 2/12, 1/12, 7/12",        "note": "power", "k": 6,  "target": 1},
    {"index": 28, "n": 12, "type": "3/12, 3/12, 2/12, 2/12, 2/12",  "note": "power", "k": 6,  "target": 1},
    {"index": 29, "n": 15, "type": "1/15, 2/15, 4/15, 8/15",        "note": "fifteen"},
    {"index": 30, "n": 16, "type": "1/16, 3/16, 5/16, 7/16",        "note": "mult-one"},
    {"index": 31, "n": 20, "type": "1/20, 3/20, 7/20, 9/20",        "note": "mult-one"},
    {"index": 32, "n": 24, "type": "1/24, 5/24, 7/24, 11/24",       "note": "mult-one"},
    {"index": 33, "n": 24, "type": "8/24, 4/24, 3/24, 9/24",        "note": "power", "k": 12, "target": 1},
    {"index": 34, "n": 24, "type": "3/24, 9/24, 2/24, 10/24",       "note": "power", "k": 12, "target": 1},
    {"index": 35, "n": 24, "type": "4/24, 4/24, 4/24, 3/24, 9/24",  "note": "power", "k": 12, "target": 1}
  ],
  "polynomial": [
    "a1^2", "a2^3", "a2*a3", "a4*a5", "a8*a9", "a4*a13", "a6*a16", "a1*a4^2",
    "a28", "a27", "a23", "a24", "a11", "a2*a19", "a8^2*a19", "a1*a18",
    "a4^2*a18", "a8^3*a18", "a12*a18", "a18^2", "a1*a12", "a4^2*a12",
    "a8^3*a12", "a12^2", "a2^2*a8^2", "a3*a8^2", "a1*a8^3", "a4^2*a8^3",
    "a2*a8^4", "a8^6", "a4^4", "a2*a8*a18", "a2*a8*a12", "a1*a2*a8",
    "a2*a4^2*a8"
  ]
})json";
}

}  // namespace typecalc
