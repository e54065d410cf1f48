#include "snasym/csv.hpp"

#include <array>
#include <charconv>
#include <cstddef>

namespace snasym {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), end};
}

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows) {
  out << "t,oracle,approx,abs_err,rel_err\n";
  for (const auto& r : rows) {
    out << format_double(r.t) << ',' << format_double(r.oracle) << ',' << format_double(r.approx)
        << ',' << format_double(r.abs_err) << ',' << format_double(r.rel_err) << '\n';
  }
}

void write_kcompare_csv(std::ostream& out, std::span<const KCompareRow> rows) {
  out << "eps,K_oracle,K_handbook,K_asym4,K_mu_series,res_handbook,res_asym4,res_mu_series\n";
  for (const auto& r : rows) {
    out << format_double(r.eps) << ',' << format_double(r.k_oracle) << ','
        << format_double(r.k_handbook) << ',' << format_double(r.k_asym4) << ','
        << format_double(r.k_mu_series) << ',' << format_double(r.res_handbook) << ','
        << format_double(r.res_asym4) << ',' << format_double(r.res_mu_series) << '\n';
  }
}

void write_order_csv(std::ostream& out, const OrderFit& fit) {
  out << "eps,max_err\n";
  for (std::size_t i = 0; i < fit.eps_list.size(); ++i)
    out << format_double(fit.eps_list[i]) << ',' << format_double(fit.max_errs[i]) << '\n';
}

std::string summary_line(const ScanReport& report) {
  const auto& s = report.summary;
  return "summary approx=" + std::string(to_string(report.config.kind)) +
         " eps=" + format_double(report.config.eps) +
         " rows=" + std::to_string(report.rows.size()) +
         " max_abs_err=" + format_double(s.max_abs_err) +
         " argmax_t=" + format_double(s.argmax_t) +
         " trust=[" + format_double(s.trust.first) + "," + format_double(s.trust.second) + "]" +
         " trust_exceeded=" + (s.trust_exceeded ? "yes" : "no");
}

}  // namespace snasym
