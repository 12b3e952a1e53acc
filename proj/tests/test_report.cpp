#include <doctest.h>

#include "xxz/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace xxz;

TEST_CASE("default tolerance loosens with chain length") {
    CHECK(default_tol(1) == doctest::Approx(1e-9));
    CHECK(default_tol(3) == doctest::Approx(1e-9));
    CHECK(default_tol(4) == doctest::Approx(1e-8));
}

TEST_CASE("record order is independent of worker count") {
    RunConfig cfg;
    cfg.N = 2;
    cfg.seed = 101;
    cfg.suites = {"algebra", "gauge"};
    ModelInstance inst = instance_for(cfg);
    cfg.workers = 1;
    auto one = run_suites(cfg, inst);
    cfg.workers = 4;
    auto four = run_suites(cfg, inst);
    REQUIRE(one.size() == four.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].name == four[i].name);
        CHECK(one[i].residual == doctest::Approx(four[i].residual));
    }
    CHECK(all_pass(one));
}

TEST_CASE("unknown suite is rejected") {
    RunConfig cfg;
    cfg.suites = {"nonsense"};
    ModelInstance inst = sample_generic(1, 1);
    CHECK_THROWS_AS(run_suites(cfg, inst), std::invalid_argument);
}

TEST_CASE("jsonl round trip") {
    RunConfig cfg;
    cfg.N = 1;
    cfg.seed = 7;
    cfg.suites = {"algebra"};
    ModelInstance inst = instance_for(cfg);
    auto recs = run_suites(cfg, inst);
    std::string path = "report_test.jsonl";
    write_jsonl(recs, path);
    std::ifstream in(path);
    std::string line;
    size_t count = 0;
    while (std::getline(in, line)) {
        ++count;
        CHECK(line.find("\"residual\"") != std::string::npos);
        CHECK(line.find("\"anchor\"") != std::string::npos);
    }
    CHECK(count == recs.size());
    std::remove(path.c_str());
}

TEST_CASE("model parameters from a config file") {
    ModelInstance ref = sample_generic(55, 2);
    std::string path = "config_test.json";
    {
        std::ofstream out(path);
        auto pair = [](cd z) {
            std::ostringstream s;
            s.precision(17);
            s << "[" << z.real() << "," << z.imag() << "]";
            return s.str();
        };
        out << "{\"q\":" << pair(ref.q) << ",\"v\":[" << pair(ref.v[0]) << "," << pair(ref.v[1])
            << "],\"kappa\":" << pair(ref.lb.kappa) << ",\"kappat\":" << pair(ref.lb.kappat)
            << ",\"xi\":" << pair(ref.lb.xi) << ",\"xit\":" << pair(ref.lb.xit)
            << ",\"tau\":" << pair(ref.rb.tau) << ",\"taut\":" << pair(ref.rb.taut)
            << ",\"mu\":" << pair(ref.rb.mu) << ",\"mut\":" << pair(ref.rb.mut) << "}";
    }
    ModelInstance got = instance_from_json(path);
    CHECK(got.N == 2);
    CHECK(std::abs(got.q - ref.q) < 1e-12);
    CHECK(std::abs(got.lb.eps_p - ref.lb.eps_p) < 1e-12);
    std::remove(path.c_str());
}

TEST_CASE("summary text") {
    RunConfig cfg;
    cfg.N = 1;
    cfg.seed = 3;
    cfg.suites = {"tq"};
    ModelInstance inst = instance_for(cfg);
    auto recs = run_suites(cfg, inst);
    std::ostringstream os;
    print_summary(recs, os);
    CHECK(os.str().find("checks passed") != std::string::npos);
}
