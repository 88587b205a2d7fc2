#pragma once

#include <ostream>
#include <string>

#include "eae/config.hpp"

namespace eae {

struct RunArtifacts {
    std::string csv_path;
    std::string meta_path;
};

// Executes one resolved command and writes <out_dir>/<command>.csv plus a
// metadata sidecar <out_dir>/<command>.meta holding the fully resolved
// configuration; feeding the sidecar back as a config file reproduces the
// CSV byte for byte. Progress lines go to `log` when given.
RunArtifacts run_config(const Setup& setup, const std::string& out_dir,
                        std::ostream* log = nullptr);

}  // namespace eae
