#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include "latin/io.hpp"
#include "latin/verify.hpp"

namespace fs = std::filesystem;
using namespace latin;

namespace {

const fs::path kScratch = SCRATCH_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

// Runs the CLI through the shell with stdout and stderr captured to files.
Run run(const std::string& args) {
  fs::create_directories(kScratch);
  const auto out = kScratch / "stdout.txt", err = kScratch / "stderr.txt";
  const std::string cmd = "cd '" + kScratch.string() + "' && '" LATINEMBED_PATH "' " + args + " > '" + out.string() +
                          "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), io::read_file(out.string()), io::read_file(err.string())};
}

std::string scratch(const std::string& name) { return (kScratch / name).string(); }

void put(const std::string& name, const std::string& text) {
  fs::create_directories(kScratch);
  io::write_file(scratch(name), text);
}

bool same_tree(const fs::path& a, const fs::path& b) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(a)) names.push_back(e.path().filename().string());
  std::size_t count_b = std::distance(fs::directory_iterator(b), fs::directory_iterator{});
  if (names.size() != count_b) return false;
  for (const auto& n : names) {
    if (!fs::exists(b / n) || io::read_file((a / n).string()) != io::read_file((b / n).string())) return false;
  }
  return true;
}

const char* kLeft = "partial 4\n0 1 2 .\n2 0 1 3\n3 . 0 .\n. 2 . 1\n";

}  // namespace

TEST_CASE("gen-mols then verify") {
  auto r = run("gen-mols --q 8 --out g8.mols");
  REQUIRE(r.code == 0);
  r = run("verify --in g8.mols --report g8.report");
  CHECK(r.code == 0);
  const auto report = io::read_file(scratch("g8.report"));
  CHECK(report.find("report order 8 squares 7\n") == 0);
  CHECK(report.find("certified yes") != std::string::npos);
  CHECK(io::parse_mols(io::read_file(scratch("g8.mols"))).size() == 7);
}

TEST_CASE("verify names the failing pair of a mutated file") {
  REQUIRE(run("gen-mols --q 5 --out g5.mols").code == 0);
  auto set = io::parse_mols(io::read_file(scratch("g5.mols")));
  auto squares = set.squares();
  squares[2] = squares[2].with_cell(3, 1, (squares[2](3, 1) + 1) % 5);
  put("g5bad.mols", io::emit_mols(MolsSet(squares)));
  const auto r = run("verify --in g5bad.mols");
  CHECK(r.code == 1);
  CHECK(r.err.find("pair 0 2") != std::string::npos);
  CHECK(r.err.find("pair 2 3") != std::string::npos);
  CHECK(r.err.find("pair 0 1") == std::string::npos);
  CHECK(r.out.find("certified no") != std::string::npos);
}

TEST_CASE("embed-square on the order-4 partial example") {
  put("left.txt", kLeft);
  const auto r = run("embed-square --in left.txt --out-dir es");
  REQUIRE(r.code == 0);
  const auto set = io::parse_mols(io::read_file(scratch("es/all.mols")));
  CHECK(set.size() == 16);
  CHECK(set.order() == 256);
  CHECK(verify_mols(set).certified);
  const auto w = io::parse_witness(io::read_file(scratch("es/witness.txt")));
  const auto host = io::parse_latin(io::read_file(scratch("es/host.txt")));
  CHECK(check_embedding(io::parse_partial(kLeft), host, w));
  CHECK(host == set[0]);
  const auto manifest = io::read_file(scratch("es/manifest.txt"));
  CHECK(manifest.find("host_order 256\n") != std::string::npos);
  CHECK(manifest.find("mates 15\n") != std::string::npos);
  CHECK(manifest.find("file host.txt host\nfile mate_01.txt mate 1\n") != std::string::npos);
  CHECK(io::read_file(scratch("es/report.txt")).find("witness source_in_host ok") != std::string::npos);

  const auto v = run("verify --in es/all.mols --witness es/witness.txt --source left.txt");
  CHECK(v.code == 0);
}

TEST_CASE("embed-square direct route and idempotent route") {
  put("l3.txt", "latin 3\n1 2 0\n0 1 2\n2 0 1\n");
  auto r = run("embed-square --in l3.txt --out-dir es3");
  REQUIRE(r.code == 0);
  const auto set = io::parse_mols(io::read_file(scratch("es3/all.mols")));
  CHECK(set.order() == 9);
  CHECK(set.size() == 3);
  CHECK(io::read_file(scratch("es3/manifest.txt")).find("pipeline square") != std::string::npos);

  put("idem.txt", "partial 3\n0 . 1\n. 1 .\n. . .\n");
  r = run("embed-square --in idem.txt --idempotent --out-dir esi");
  REQUIRE(r.code == 0);
  const auto host = io::parse_latin(io::read_file(scratch("esi/host.txt")));
  CHECK(host.order() == 64);
  CHECK(is_idempotent(host));

  put("one.txt", "partial 1\n0\n");
  r = run("embed-square --in one.txt --out-dir es1");
  CHECK(r.code == 0);
  CHECK(r.err.find("note:") != std::string::npos);
}

TEST_CASE("embed-pair, amplify, product and build-576") {
  REQUIRE(run("gen-mols --q 3 --out g3.mols").code == 0);
  const auto g3 = io::parse_mols(io::read_file(scratch("g3.mols")));
  put("s0.txt", io::emit_grid(g3[0]));
  put("s1.txt", io::emit_grid(g3[1]));
  auto r = run("embed-pair --a1 s0.txt --a2 s1.txt --d1 s1.txt --d2 s0.txt --c g3.mols --f reverse --out-dir ep");
  REQUIRE(r.code == 0);
  const auto ep = io::parse_mols(io::read_file(scratch("ep/all.mols")));
  CHECK(ep.size() == 4);
  CHECK(verify_mols(ep).certified);
  r = run("embed-pair --a1 s0.txt --a2 s0.txt --d1 s1.txt --d2 s0.txt --c g3.mols --out-dir ep2");
  CHECK(r.code == 1);
  r = run("embed-pair --a1 s0.txt --a2 s1.txt --d1 s1.txt --d2 s0.txt --c g3.mols --f 0,0 --out-dir ep3");
  CHECK(r.code == 1);

  r = run("amplify --in g3.mols --out amp.mols");
  REQUIRE(r.code == 0);
  CHECK(io::parse_mols(io::read_file(scratch("amp.mols"))).size() == 4);

  REQUIRE(run("gen-mols --q 4 --out g4.mols").code == 0);
  r = run("product --a g4.mols --b g3.mols --out p12.mols");
  REQUIRE(r.code == 0);
  const auto p12 = io::parse_mols(io::read_file(scratch("p12.mols")));
  CHECK(p12.order() == 12);
  CHECK(p12.size() == 2);

  r = run("build-576 --out b576.mols");
  REQUIRE(r.code == 0);
  const auto b = io::parse_mols(io::read_file(scratch("b576.mols")));
  CHECK(b.order() == 576);
  CHECK(b.size() == 4);
  r = run("build-576 --mols24 g3.mols --out bad576.mols");
  CHECK(r.code == 1);
}

TEST_CASE("complete") {
  put("left.txt", kLeft);
  auto r = run("complete --in left.txt --order 8 --out c8.txt");
  REQUIRE(r.code == 0);
  const auto l = io::parse_latin(io::read_file(scratch("c8.txt")));
  CHECK(is_latin(l).ok());
  CHECK(check_embedding(io::parse_partial(kLeft), l, EmbeddingWitness::identity(4, 8)));
  CHECK(run("complete --in left.txt --order 7 --out c7.txt").code == 1);
  CHECK(run("complete --in left.txt --order 9 --idempotent --out c9.txt").code == 1);
  put("idem.txt", "partial 3\n0 . 1\n. 1 .\n. . .\n");
  r = run("complete --in idem.txt --order 7 --idempotent --out i7.txt");
  REQUIRE(r.code == 0);
  CHECK(is_idempotent(io::parse_latin(io::read_file(scratch("i7.txt")))));
}

TEST_CASE("outputs are byte-identical across runs") {
  put("left.txt", kLeft);
  REQUIRE(run("embed-square --in left.txt --out-dir det_a").code == 0);
  REQUIRE(run("embed-square --in left.txt --out-dir det_b").code == 0);
  CHECK(same_tree(kScratch / "det_a", kScratch / "det_b"));

  put("idem.txt", "partial 3\n0 . 1\n. 1 .\n. . .\n");
  REQUIRE(run("embed-square --in idem.txt --idempotent --out-dir deti_a").code == 0);
  REQUIRE(run("embed-square --in idem.txt --idempotent --out-dir deti_b").code == 0);
  CHECK(same_tree(kScratch / "deti_a", kScratch / "deti_b"));

  REQUIRE(run("build-576 --out d1.mols").code == 0);
  REQUIRE(run("build-576 --out d2.mols --threads 3").code == 0);
  CHECK(io::read_file(scratch("d1.mols")) == io::read_file(scratch("d2.mols")));

  REQUIRE(run("gen-mols --q 9 --out g9.mols").code == 0);
  REQUIRE(run("verify --in g9.mols --report v1.txt --threads 1").code == 0);
  REQUIRE(run("verify --in g9.mols --report v2.txt --threads 4").code == 0);
  CHECK(io::read_file(scratch("v1.txt")) == io::read_file(scratch("v2.txt")));
}

TEST_CASE("usage errors, parse errors and help") {
  CHECK(run("").code == 2);
  CHECK(run("gen-mols").code == 2);
  CHECK(run("gen-mols --q 8").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("info").code == 2);
  CHECK(run("info --field 2").code == 2);

  CHECK(run("gen-mols --q 6 --out x.mols").code == 1);
  put("broken.txt", "latin 2\n0 .\n1 0\n");
  const auto r = run("complete --in broken.txt --order 4 --out x.txt");
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2, column 3") != std::string::npos);
  CHECK(run("verify --in missing.mols").code == 1);

  for (const char* sub : {"gen-mols", "complete", "embed-square", "embed-pair", "amplify", "build-576", "verify",
                          "product", "info"}) {
    CAPTURE(sub);
    const auto h = run(std::string(sub) + " --help");
    CHECK(h.code == 0);
    CHECK(h.out.find("mols <n> <count>") != std::string::npos);
    CHECK(h.out.find("--") != std::string::npos);
  }
}

TEST_CASE("info") {
  auto r = run("info --field 2 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("modulus x^3 + x + 1") != std::string::npos);
  r = run("info --formats");
  CHECK(r.code == 0);
  CHECK(r.out.find("witness <n> <host order>") != std::string::npos);
  CHECK(run("info --field 4 1").code == 1);
}
