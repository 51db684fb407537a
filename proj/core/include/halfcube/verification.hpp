#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "halfcube/errors.hpp"
#include "halfcube/halfcube_complex.hpp"
#include "halfcube/report.hpp"

namespace halfcube {

/// Builds complexes once per n and optionally persists them as JSON under
/// cache_dir (file halfcube_n<N>.json). Thread safe.
class ComplexCache {
public:
    explicit ComplexCache(std::string cache_dir = {}, int max_n = 6) : dir_(std::move(cache_dir)), max_n_(max_n) {}

    const HalfCubeComplex& get(int n);

private:
    std::string dir_;
    int max_n_;
    std::mutex mutex_;
    std::map<int, std::unique_ptr<HalfCubeComplex>> built_;
};

struct VerifyOptions {
    int threads = 1;
    Budget budget;
    std::string cache_dir;
};

struct VerificationResult {
    Report report;
    std::vector<std::pair<std::string, double>> seconds;  // per suite, kept out of the report
};

/// Suite names accepted by run_suite and the command line. "theorem44" is
/// the equivariant-homology suite (Hopf traces against chi_D).
const std::vector<std::string>& suite_names();

/// Runs one suite for n up to n_max (each suite clips to the range where it
/// is defined). "all" runs everything in order and skips the rest when the
/// chain gate fails. Throws std::invalid_argument for an unknown suite and
/// BudgetExceeded when n_max is beyond what a suite may build.
VerificationResult run_suite(const std::string& suite, int n_max, const VerifyOptions& options = {});

// Individual suites, usable directly.
Report verify_faces(int n_max, const Budget& budget = {});
Report verify_chain(ComplexCache& cache, int n_max, int threads = 1);
Report verify_homology(ComplexCache& cache, int n_max);
Report verify_betti(int n_max = 30);
Report verify_top_cell_sign(ComplexCache& cache, int n_max);
Report verify_equivariant_homology(ComplexCache& cache, int n_max, int threads = 1);
Report verify_y_traces(ComplexCache& cache, int n_max, int threads = 1);
Report verify_branching(int n_max);
Report verify_restriction(int n_max);
Report verify_character_theory(int n_max, int group_max_n = 6);
Report verify_multiplicity_free(int n_max);

}  // namespace halfcube
