#ifndef OPFBOUND_NETCASE_HPP
#define OPFBOUND_NETCASE_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace opfbound {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateBranchError : std::runtime_error {
  explicit DegenerateBranchError(const std::string& what) : std::runtime_error(what) {}
};

enum class BusType { PQ = 1, PV = 2, Slack = 3 };

struct Bus {
  int id = 0;  // external 1-based id from the case file
  BusType type = BusType::PQ;
  double pd = 0, qd = 0;    // per-unit demand
  double gs = 0, bs = 0;    // per-unit shunt
  double vmin = 0, vmax = 0;
};

struct Gen {
  int bus = 0;       // external bus id
  int bus_index = 0; // contiguous 0-based index, filled by validation
  double pmin = 0, pmax = 0;
  double qmin = 0, qmax = 0;
  double c2 = 0, c1 = 0, c0 = 0;  // $/h on per-unit active power
};

struct Branch {
  int from = 0, to = 0;            // external bus ids
  int from_index = 0, to_index = 0;
  double r = 0, x = 0, b_sh = 0;
  double tap = 1.0;
  double shift = 0;                // radians
  double smax = 0;                 // per-unit apparent-power limit, 0 = none
  double ang_min = 0, ang_max = 0; // radians, ang_min <= 0 <= ang_max
};

// Validated per-unit network model. Immutable after construction.
struct NetworkCase {
  std::string name;
  double base_mva = 100.0;
  std::vector<Bus> buses;
  std::vector<Gen> gens;
  std::vector<Branch> branches;
  int ref_bus = 0;        // external id of the slack bus
  int ref_index = 0;      // internal index of the slack bus

  int n() const { return static_cast<int>(buses.size()); }
  int num_gens() const { return static_cast<int>(gens.size()); }
  int num_branches() const { return static_cast<int>(branches.size()); }

  int bus_index(int external_id) const;
  // generator index at internal bus, or -1
  int gen_at_bus(int bus_idx) const;

  // fills internal indices, checks all invariants; throws ValidationError
  void validate_and_index();

 private:
  std::unordered_map<int, int> index_of_;
  std::vector<int> gen_of_bus_;
};

struct AdmittanceMatrix {
  int n = 0;
  Eigen::SparseMatrix<std::complex<double>> Y;
  Eigen::SparseMatrix<double> G, B;
  // per-branch two-port coefficients: I_f = yff V_f + yft V_t, I_t = ytf V_f + ytt V_t
  std::vector<std::complex<double>> yff, yft, ytf, ytt;
};

// Parses the documented subset of the matrix-block case text format.
NetworkCase parse_case(std::string_view text);
NetworkCase load_case_file(const std::string& path);

AdmittanceMatrix build_admittance(const NetworkCase& nc);

// Canonical JSON serialization (fixtures, round-trips field-by-field).
std::string to_json(const NetworkCase& nc);
NetworkCase case_from_json(std::string_view json_text);

// Default angle-difference bound used when a case omits per-line limits.
inline constexpr double kDefaultAngleBound = 1.0471975511965976;  // pi/3

}  // namespace opfbound

#endif
