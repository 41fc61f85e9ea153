#include <catch2/catch.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ctc/common.hpp"

#ifndef CTC_CLI_PATH
#error "CTC_CLI_PATH must point at the built ctc binary"
#endif

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CTC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ctc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli basics and exit codes") {
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("definitely-not-a-subcommand") == 2);
  CHECK(run_cli("spectrum") == 2);             // missing required --N
  CHECK(run_cli("spectrum --N 0 --omega 0.9") == 2);
  CHECK(run_cli("meanfield --m 1.5") == 2);
  CHECK(run_cli("meanfield --m 0.1 --dry-run") == 0);
  CHECK(run_cli("spectrum --N 4 --omega 0.9 --dry-run") == 0);
  CHECK(run_cli("network --coupling sideways --dry-run") == 2);  // validated before dry-run exit
  CHECK(run_cli("network --n 4 --gamma 0.1 --coupling sideways --t-end 50 --samples 64") == 2);
  CHECK(run_cli("network --n 4 --gamma 0.1 --t-end 50 --t0 10 --samples 64 --dry-run") == 0);
  CHECK(run_cli("network --n 4 --t-end 50 --dry-run") == 2);  // t0 >= t_end caught early
  CHECK(run_cli("figure not-a-preset") == 2);
  CHECK(run_cli("sweep --plan /nonexistent/plan.json") == 2);
}

TEST_CASE("cli config files reject unknown keys") {
  TempDir tmp;
  {
    std::ofstream out(tmp.str("bad.ini"));
    out << "definitely_a_typo=true\n";
  }
  {
    std::ofstream out(tmp.str("good.ini"));
    out << "dry-run=true\n";
  }
  CHECK(run_cli("meanfield --m 0.1 --dry-run --config " + tmp.str("bad.ini")) == 2);
  CHECK(run_cli("meanfield --m 0.1 --config " + tmp.str("good.ini")) == 0);
}

TEST_CASE("cli spectrum writes tables") {
  TempDir tmp;
  CHECK(run_cli("spectrum --N 4 --omega 0.9 --out-eigen " + tmp.str("eig.csv") +
                " --out-sectors " + tmp.str("sec.csv") + " --out-json " +
                tmp.str("sum.json")) == 0);
  CHECK(fs::exists(tmp.str("eig.csv")));
  CHECK(fs::exists(tmp.str("sec.csv")));
  CHECK(fs::exists(tmp.str("sum.json")));
  std::ifstream in(tmp.str("eig.csv"));
  std::string header;
  std::getline(in, header);
  CHECK(header == "N,J,m,re_lambda,im_lambda,is_dominant");
}

TEST_CASE("cli classify encodes the regime in the exit code") {
  TempDir tmp;
  SECTION("identical sinusoids -> complete-sync (16)") {
    std::ofstream out(tmp.str("sync.csv"));
    out << "t,mz_0,mz_1,mz_2\n";
    for (int i = 0; i < 2000; ++i) {
      const double t = 0.5 * i;
      const double x = std::sin(0.2 * t);
      out << t << "," << x << "," << x << "," << x << "\n";
    }
    out.close();
    CHECK(run_cli("classify --traj " + tmp.str("sync.csv") + " --t0 100") == 16);
  }
  SECTION("flat lines -> oscillation-death (14)") {
    std::ofstream out(tmp.str("flat.csv"));
    out << "t,mz_0,mz_1\n";
    for (int i = 0; i < 500; ++i) out << 0.5 * i << ",0.25,-0.1\n";
    out.close();
    CHECK(run_cli("classify --traj " + tmp.str("flat.csv") + " --t0 50") == 14);
  }
  SECTION("incommensurate sinusoids -> unsynchronized (10)") {
    std::ofstream out(tmp.str("unsync.csv"));
    out << "t,mz_0,mz_1\n";
    for (int i = 0; i < 4000; ++i) {
      const double t = 0.5 * i;
      out << t << "," << std::sin(0.2 * t) << "," << std::sin(0.2 * std::sqrt(2.0) * t)
          << "\n";
    }
    out.close();
    CHECK(run_cli("classify --traj " + tmp.str("unsync.csv") + " --t0 100") == 10);
  }
  SECTION("window exceeding the data is a validation error") {
    std::ofstream out(tmp.str("short.csv"));
    out << "t,mz_0,mz_1\n0,0.1,0.2\n1,0.2,0.1\n";
    out.close();
    CHECK(run_cli("classify --traj " + tmp.str("short.csv") + " --t0 0 --t1 99") == 2);
  }
}

TEST_CASE("cli network run produces a report and reproducible trajectory") {
  TempDir tmp;
  const std::string common =
      "network --n 6 --seed 11 --gamma 0.3 --t-end 120 --t0 40 --samples 256 "
      "--no-lyapunov ";
  CHECK(run_cli(common + "--out-traj " + tmp.str("a.csv") + " --report " +
                tmp.str("rep.json")) == 0);
  CHECK(run_cli(common + "--out-traj " + tmp.str("b.csv")) == 0);
  std::ifstream fa(tmp.str("a.csv")), fb(tmp.str("b.csv"));
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(fs::exists(tmp.str("rep.json")));
}

TEST_CASE("cli meanfield and phase-diagram") {
  TempDir tmp;
  CHECK(run_cli("meanfield --m 0.1 --t-end 100 --samples 512 --out " + tmp.str("mf.csv") +
                " --portrait " + tmp.str("pq.csv")) == 0);
  CHECK(fs::exists(tmp.str("mf.csv")));
  CHECK(fs::exists(tmp.str("pq.csv")));
  CHECK(run_cli("phase-diagram --m-steps 8 --ratio-steps 8 --out " + tmp.str("pd.csv")) == 0);
  CHECK(fs::exists(tmp.str("pd.csv")));
}

TEST_CASE("cli exact evolution") {
  TempDir tmp;
  CHECK(run_cli("evolve --N 20 --m 0.1 --t-end 20 --samples 128 --out " +
                tmp.str("exact.csv")) == 0);
  CHECK(fs::exists(tmp.str("exact.csv")));
  CHECK(run_cli("evolve --N 20 --omega 0.9") == 2);  // neither --two-j nor --m
}

TEST_CASE("cli figure preset emits a manifest") {
  TempDir tmp;
  CHECK(run_cli("figure figs1b --out " + tmp.str("bundle")) == 0);
  CHECK(fs::exists(tmp.str("bundle/manifest.json")));
  CHECK(fs::exists(tmp.str("bundle/exact_vs_mf_N50.csv")));
}

TEST_CASE("cli network output feeds classify") {
  TempDir tmp;
  CHECK(run_cli("network --n 8 --seed 2 --gamma 0 --coupling none --t-end 400 --t0 100 "
                "--samples 2048 --no-lyapunov --out-binary " +
                tmp.str("traj.bin")) == 0);
  // Uncoupled CTCs with spread frequencies: unsynchronized (exit 10).
  CHECK(run_cli("classify --traj " + tmp.str("traj.bin") + " --t0 100") == 10);
}
