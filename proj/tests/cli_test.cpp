#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfpi/cli.hpp"
#include "hopfpi/document.hpp"
#include "json.hpp"

using namespace hopfpi;
namespace fs = std::filesystem;

namespace {

const Field kQ = Field::rationals();

struct CliResult {
  int rc;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string gallery(const std::string& name) {
  return std::string(HOPFPI_GALLERY_DIR) + "/" + name;
}

// One scratch directory per test run, wiped on first use.
std::string scratch(const std::string& name) {
  static const std::string dir = [] {
    auto d = fs::temp_directory_path() / "hopfpi-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d.string();
  }();
  return dir + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool same_bytes(const std::string& a, const std::string& b) {
  return read_file(a) == read_file(b);
}

// The solution lines of an enumerate-rb run, without the timing line.
std::vector<std::string> solution_lines(const std::string& out) {
  std::vector<std::string> lines;
  std::istringstream ss(out);
  std::string line;
  while (std::getline(ss, line))
    if (line.rfind("operator:", 0) == 0 || line.rfind("count:", 0) == 0)
      lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("every gallery document validates and serializes to itself") {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(gallery(""))) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    CAPTURE(entry.path().string());
    auto r = run({"validate", entry.path().string()});
    CHECK(r.rc == 0);
    auto text = read_file(entry.path().string());
    CHECK(serialize_document(parse_document(text)) == text);
  }
  CHECK(count == 52);
}

TEST_CASE("validate reports math failures and input errors distinctly") {
  auto missing = run({"validate", scratch("no-such-file.json")});
  CHECK(missing.rc == 2);
  CHECK(missing.err.find("input error") != std::string::npos);

  Document doc = load_document(gallery("s3.sign.hopf.json"));
  auto h = std::get<HopfPiAlgebra>(doc.value);
  h.antipode.blocks[0].at(0, 0) = h.antipode.blocks[0].at(0, 0) + Scalar::one(kQ);
  save_document(make_document(h), scratch("bad-antipode.json"));
  auto bad = run({"validate", scratch("bad-antipode.json")});
  CHECK(bad.rc == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("antipode") != std::string::npos);
}

TEST_CASE("construct reproduces the gallery documents byte for byte") {
  auto ga = run({"construct", "group-algebra", "--group", gallery("s3.group.json"),
                 "--deg", "sign", "-o", scratch("s3.sign.hopf.json")});
  CHECK(ga.rc == 0);
  CHECK(same_bytes(scratch("s3.sign.hopf.json"), gallery("s3.sign.hopf.json")));

  auto rb = run({"construct", "antipode-rb", "--input", gallery("s3.sign.hopf.json"),
                 "-o", scratch("rb.json")});
  CHECK(rb.rc == 0);
  CHECK(same_bytes(scratch("rb.json"), gallery("s3.sign.rb-antipode.json")));

  auto br = run({"construct", "brace-from-rb", "--input", scratch("rb.json"),
                 "-o", scratch("rb-brace.json")});
  CHECK(br.rc == 0);
  CHECK(same_bytes(scratch("rb-brace.json"), gallery("s3.sign.op-brace.json")));

  auto mp = run({"construct", "brace-to-mp", "--input", gallery("s3.sign.op-brace.json"),
                 "-o", scratch("mp.json")});
  CHECK(mp.rc == 0);
  CHECK(same_bytes(scratch("mp.json"), gallery("s3.sign.op-mp.json")));

  auto back = run({"construct", "mp-to-brace", "--input", scratch("mp.json"),
                   "-o", scratch("mp-brace.json")});
  CHECK(back.rc == 0);
  CHECK(same_bytes(scratch("mp-brace.json"), gallery("s3.sign.op-brace.json")));

  auto ph = run({"construct", "post-hopf-from-brace", "--input",
                 gallery("s3.sign.op-brace.json"), "-o", scratch("post.json")});
  CHECK(ph.rc == 0);
  CHECK(same_bytes(scratch("post.json"), gallery("s3.sign.post-conj.json")));

  auto phb = run({"construct", "brace-from-post-hopf", "--input", scratch("post.json"),
                  "-o", scratch("post-brace.json")});
  CHECK(phb.rc == 0);
  CHECK(same_bytes(scratch("post-brace.json"), gallery("s3.sign.op-brace.json")));
}

TEST_CASE("construct outputs revalidate through the cli") {
  auto sub = run({"construct", "subadjacent", "--input",
                  gallery("s3.sign.post-conj.json"), "-o", scratch("sub.json")});
  CHECK(sub.rc == 0);
  auto bp = run({"construct", "bicrossed", "--input", gallery("s3.sign.op-mp.json"),
                 "-o", scratch("double.json")});
  CHECK(bp.rc == 0);
  auto fa = run({"construct", "factorization-rb", "--input",
                 gallery("v4.proj2.hopf.json"), "--split",
                 gallery("v4.proj2.factorization.json"), "-o", scratch("fac.json")});
  CHECK(fa.rc == 0);
  auto de = run({"construct", "descendent", "--input",
                 gallery("s3.sign.rb-antipode.json"), "-o", scratch("desc.json")});
  CHECK(de.rc == 0);
  for (const char* f : {"sub.json", "double.json", "fac.json", "desc.json"}) {
    CAPTURE(f);
    CHECK(run({"validate", scratch(f)}).rc == 0);
  }
}

TEST_CASE("gates reject inputs whose hypotheses fail") {
  Document doc = load_document(gallery("s3.sign.op-mp.json"));
  auto mp = std::get<MatchedPair>(doc.value);
  mp.to_k[0][0].at(0, 0, 0) = mp.to_k[0][0].at(0, 0, 0) + Scalar::one(kQ);
  save_document(make_document(mp), scratch("bad-mp.json"));
  auto r = run({"construct", "mp-to-brace", "--input", scratch("bad-mp.json"),
                "-o", scratch("never.json")});
  CHECK(r.rc == 1);
  CHECK(r.err.find("hypothesis not met") != std::string::npos);
  CHECK_FALSE(fs::exists(scratch("never.json")));
}

TEST_CASE("twisting families must preserve the Hopf structure") {
  auto good = run({"construct", "twist-rb", "--input",
                   gallery("s3.sign.rb-antipode.json"), "--family",
                   gallery("s3.sign.twist-family.json"), "-o", scratch("twist.json")});
  CHECK(good.rc == 0);
  CHECK(run({"validate", scratch("twist.json")}).rc == 0);

  // A block that moves the unit basis vector is not a Hopf morphism.
  Document fam = load_document(gallery("s3.sign.twist-family.json"));
  auto mf = std::get<MapFamily>(fam.value);
  Mat moved(3, 3, kQ);
  moved.at(0, 1) = Scalar::one(kQ);
  moved.at(1, 0) = Scalar::one(kQ);
  moved.at(2, 2) = Scalar::one(kQ);
  mf.blocks[0] = moved;
  save_document(make_document(mf), scratch("bad-family.json"));
  auto bad = run({"construct", "twist-rb", "--input",
                  gallery("s3.sign.rb-antipode.json"), "--family",
                  scratch("bad-family.json"), "-o", scratch("never2.json")});
  CHECK(bad.rc == 1);
  CHECK(bad.err.find("hypothesis not met") != std::string::npos);
}

TEST_CASE("automorphism families relabel braces and operators") {
  auto ab = run({"construct", "aut-brace", "--input",
                 gallery("v4.trivial.trivial-brace.json"), "--family",
                 gallery("v4.swap-family.json"), "-o", scratch("aut-brace.json")});
  CHECK(ab.rc == 0);
  auto rb = run({"construct", "antipode-rb", "--input", gallery("v4.trivial.hopf.json"),
                 "-o", scratch("v4-rb.json")});
  CHECK(rb.rc == 0);
  auto ar = run({"construct", "aut-rb", "--input", scratch("v4-rb.json"), "--family",
                 gallery("v4.swap-family.json"), "-o", scratch("aut-rb.json")});
  CHECK(ar.rc == 0);
  CHECK(run({"validate", scratch("aut-brace.json")}).rc == 0);
  CHECK(run({"validate", scratch("aut-rb.json")}).rc == 0);
}

TEST_CASE("smash products assemble from action documents") {
  auto sp = run({"construct", "smash-pimod", "--left", gallery("v4.trivial.hopf.json"),
                 "--right", gallery("z2.trivial.hopf.json"), "--action",
                 gallery("z2-on-v4.module-action.json"), "-o", scratch("smash1.json")});
  CHECK(sp.rc == 0);
  auto sm = run({"construct", "smash-modlike", "--left", gallery("v4.trivial.hopf.json"),
                 "--right", gallery("z2.identity.hopf.json"), "--action",
                 gallery("z2-graded-on-v4.module-action.json"), "-o",
                 scratch("smash2.json")});
  CHECK(sm.rc == 0);
  CHECK(run({"validate", scratch("smash1.json")}).rc == 0);
  CHECK(run({"validate", scratch("smash2.json")}).rc == 0);

  // The graded action does not fit the one-grade coefficient algebra.
  auto mis = run({"construct", "smash-pimod", "--left", gallery("v4.trivial.hopf.json"),
                  "--right", gallery("z2.trivial.hopf.json"), "--action",
                  gallery("z2-graded-on-v4.module-action.json"), "-o",
                  scratch("never3.json")});
  CHECK(mis.rc == 2);
  CHECK(mis.err.find("input error") != std::string::npos);
}

TEST_CASE("operator search is deterministic and oracle checked") {
  std::vector<std::string> v4 = {"enumerate-rb", "--group", gallery("v4.group.json"),
                                 "--deg", "trivial"};
  auto first = run(v4);
  auto second = run(v4);
  CHECK(first.rc == 0);
  CHECK(solution_lines(first.out) == solution_lines(second.out));

  auto ora = run({"enumerate-rb", "--group", gallery("v4.group.json"), "--deg",
                  "trivial", "--oracle"});
  CHECK(ora.rc == 0);
  CHECK(ora.out.find("count: 16") != std::string::npos);
  CHECK(ora.out.find("check search: pass") != std::string::npos);

  auto z2 = run({"enumerate-rb", "--group", gallery("z2.group.json"), "--deg",
                 "trivial"});
  CHECK(z2.rc == 0);
  CHECK(z2.out.find("operator: 0 0") != std::string::npos);
  CHECK(z2.out.find("operator: 0 1") != std::string::npos);

  auto big = run({"enumerate-rb", "--group", gallery("s3.group.json"), "--deg",
                  "trivial", "--bound", "10"});
  CHECK(big.rc == 2);
  CHECK(big.err.find("bound") != std::string::npos);

  auto saved = run({"enumerate-rb", "--group", gallery("z4.group.json"), "--deg",
                    "z2:0,1,0,1", "-o", scratch("rb-list.json")});
  CHECK(saved.rc == 0);
  auto j = nlohmann::json::parse(read_file(scratch("rb-list.json")));
  CHECK(j.at("count").get<size_t>() == j.at("solutions").size());
}

TEST_CASE("ybe analysis covers both orientations and the perturbed control") {
  auto triv2 = run({"ybe", gallery("s3.sign.trivial-brace.json"), "--n", "2"});
  CHECK(triv2.rc == 0);
  auto triv3 = run({"ybe", gallery("s3.sign.trivial-brace.json"), "--n", "3"});
  CHECK(triv3.rc == 0);
  CHECK(triv3.out.find("orientation:") != std::string::npos);

  auto op = run({"ybe", gallery("s3.sign.op-brace.json")});
  CHECK(op.rc == 0);
  CHECK(op.out.find("orientation: the intertwiner carries c to sigma") !=
        std::string::npos);

  auto tiny = run({"ybe", gallery("z1.trivial.trivial-brace.json")});
  CHECK(tiny.rc == 0);

  auto hurt = run({"ybe", gallery("s3.sign.trivial-brace.json"), "--perturb"});
  CHECK(hurt.rc == 1);
  CHECK(hurt.out.find("FAIL") != std::string::npos);

  auto badn = run({"ybe", gallery("s3.sign.trivial-brace.json"), "--n", "5"});
  CHECK(badn.rc == 2);
}

TEST_CASE("json reports carry the same verdicts as the text reports") {
  auto ok = run({"validate", gallery("s3.sign.op-brace.json"), "--json"});
  CHECK(ok.rc == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("exit").get<int>() == 0);
  CHECK_FALSE(j.at("checks").empty());
  for (const auto& c : j.at("checks")) CHECK(c.at("pass").get<bool>());

  Document doc = load_document(gallery("s3.sign.hopf.json"));
  auto h = std::get<HopfPiAlgebra>(doc.value);
  h.antipode.blocks[0].at(0, 0) = h.antipode.blocks[0].at(0, 0) + Scalar::one(kQ);
  save_document(make_document(h), scratch("bad-antipode2.json"));
  auto bad = run({"validate", scratch("bad-antipode2.json"), "--json"});
  CHECK(bad.rc == 1);
  auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb.at("exit").get<int>() == 1);
  bool any_fail = false;
  for (const auto& c : jb.at("checks"))
    if (!c.at("pass").get<bool>()) any_fail = true;
  CHECK(any_fail);
}

TEST_CASE("help prints and malformed invocations are input errors") {
  auto help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("construct") != std::string::npos);
  auto sub_help = run({"construct", "group-algebra", "--help"});
  CHECK(sub_help.rc == 0);
  CHECK(sub_help.out.find("--deg") != std::string::npos);

  CHECK(run({}).rc == 2);
  CHECK(run({"construct"}).rc == 2);
  CHECK(run({"frobnicate"}).rc == 2);
  CHECK(run({"validate"}).rc == 2);
}
