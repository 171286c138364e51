#include "cubinv/parallel.hpp"

namespace cubinv {

namespace {
std::atomic<unsigned> g_jobs{1};
}

void set_max_jobs(unsigned jobs) { g_jobs = jobs == 0 ? 1 : jobs; }
unsigned max_jobs() { return g_jobs; }

}  // namespace cubinv
