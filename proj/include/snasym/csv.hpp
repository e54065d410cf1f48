#pragma once

#include <ostream>
#include <span>
#include <string>

#include "snasym/order_fit.hpp"
#include "snasym/scan.hpp"

namespace snasym {

/// Shortest decimal string that round-trips to the same binary64.
std::string format_double(double value);

/// Header t,oracle,approx,abs_err,rel_err; LF line endings.
void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows);
void write_kcompare_csv(std::ostream& out, std::span<const KCompareRow> rows);
void write_order_csv(std::ostream& out, const OrderFit& fit);

std::string summary_line(const ScanReport& report);

}  // namespace snasym
