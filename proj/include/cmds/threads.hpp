#pragma once

#include <cstdint>

namespace cmds {

/* Worker count for data-parallel scans. Honors the CMDS_THREADS environment
 * variable (values < 1 mean "decide automatically"); small workloads run on
 * a single thread regardless. */
int worker_count(std::int64_t work_items);

} // namespace cmds
