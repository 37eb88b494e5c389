// Copyright 2026 The dynstrength Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON and CSV rendering of results. Numbers carry 12 significant digits and
// never depend on the locale.

#include <string>
#include <vector>

#include "dynstrength/bounds.hpp"
#include "dynstrength/canonical.hpp"
#include "dynstrength/entangle.hpp"
#include "dynstrength/harness.hpp"
#include "dynstrength/metric.hpp"
#include "dynstrength/schmidt.hpp"

namespace dynstrength {

/// Shortest text for v rounded to 12 significant digits.
std::string format_number(double v);
/// v rounded to 12 significant digits.
double round12(double v);

struct ReportMeta {
  std::string command;
  std::uint64_t seed = 0;
};

std::string schmidt_report(const std::string& gate, const ComplexMatrix& u, const Partition& part,
                           const ReportMeta& meta);
std::string canonical_report(const ComplexMatrix& u, const ReportMeta& meta);
std::string strength_report(const StrengthReport& r, const ReportMeta& meta);
std::string hs_report(const HsStrength& r, const ReportMeta& meta);
std::string channel_report(const std::vector<StrengthReport>& reports, const ReportMeta& meta);
std::string bound_report(const BoundReport& r, const ReportMeta& meta);
std::string property_report(const std::vector<PropertyCase>& cases, const ReportMeta& meta);

/// Header line of column names, then one line per row.
std::string to_csv(const SweepResult& sweep);

}  // namespace dynstrength
