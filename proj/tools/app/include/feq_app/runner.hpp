#pragma once

#include "feq_app/config.hpp"
#include "feq_app/report.hpp"

namespace feq::app {

/// Runs every task of the config. Throws ConfigError for requests the
/// equation does not support, and UnsupportedDomainError for enumeration on
/// infinite groups.
Report run_config(const Config& cfg);

/// 0 when every verified family passes, 1 otherwise.
int exit_code(const Report& r);

}  // namespace feq::app
