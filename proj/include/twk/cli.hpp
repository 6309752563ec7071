#ifndef TWK_CLI_HPP
#define TWK_CLI_HPP

#include "twk/oracle.hpp"
#include "twk/su2.hpp"
#include "twk/su3.hpp"

#include <iosfwd>
#include <string>

namespace twk {

enum class Mode : uint8_t { Compute, Verify, ExportMatrices };
enum class EmitFormat : uint8_t { Json, Tex, Text };

struct RunConfig {
    Group group = Group::SU2;
    std::string functor;
    Mode mode = Mode::Compute;
    EmitFormat emit = EmitFormat::Text;
    int oracle_points = 100;
    uint64_t seed = 0;
    SU3Route route = SU3Route::Koszul;
    std::string output_path;  // empty = stdout
    std::string batch_path;   // when nonempty, run each line of the file and emit CSV
};

/// Exit statuses: 0 success, 1 internal error, 2 hypothesis failure,
/// 64 bad functor spec / usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitUsage = 64;

/// Execute a run; the report is written to cfg.output_path or `out`.
/// The TWK_STEP_LIMIT environment variable overrides the Groebner
/// resource guard before any computation starts.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace twk

#endif
