#include "diracwell/plot_script.hpp"

#include <sstream>

namespace diracwell {

std::string plot_script(Mode mode, const std::string& csv_name) {
  std::ostringstream os;
  os << "# diracwell " << to_string(mode) << "\n"
     << "set datafile separator ','\n"
     << "set grid\n"
     << "data = '" << csv_name << "'\n";

  switch (mode) {
    case Mode::WidthSweep:
      os << "set xlabel \"k'a\"\n"
         << "set ylabel 'group delay [hbar/mc^2]'\n"
         << "set y2label 'T'\n"
         << "set y2tics\n"
         << "set ytics nomirror\n"
         << "plot data using 1:5 skip 1 with lines title 'tau', \\\n"
         << "     data using 1:3 skip 1 axes x1y2 with lines dashtype 2 title 'T'\n";
      break;
    case Mode::PhaseSweep:
      os << "set xlabel \"k'a\"\n"
         << "set ylabel 'phase shift [rad]'\n"
         << "plot data using 1:4 skip 1 with lines title 'phi'\n";
      break;
    case Mode::EnergySweep:
      os << "set xlabel 'alpha = E/mc^2'\n"
         << "set ylabel 'group delay [hbar/mc^2]'\n"
         << "plot data using 1:4 skip 1 with lines title 'tau', \\\n"
         << "     data using 1:5 skip 1 with lines dashtype 2 title 'alpha -> 1 limit'\n";
      break;
    case Mode::Packet:
      os << "set xlabel \"k'a\"\n"
         << "set ylabel 'group delay [hbar/mc^2]'\n"
         << "plot data using 1:2 skip 1 with lines title 'stationary phase', \\\n"
         << "     data using 1:3 skip 1 with linespoints dashtype 2 title 'packet peak'\n";
      break;
    case Mode::CompareNonrel:
      os << "set xlabel \"k'a (own k')\"\n"
         << "set ylabel 'group delay [hbar/mc^2]'\n"
         << "plot data using 1:2 skip 1 with lines title 'relativistic', \\\n"
         << "     data using 1:3 skip 1 with lines dashtype 2 title 'non-relativistic'\n";
      break;
    case Mode::ThresholdTable:
      os << "set xlabel 'beta = V0/mc^2'\n"
         << "set ylabel 'E_t / mc^2'\n"
         << "plot data using 1:2 skip 1 with lines title 'closed form', \\\n"
         << "     data using 1:3 skip 1 with points title 'bisection'\n";
      break;
    case Mode::Validate:
      break;
  }
  return os.str();
}

}  // namespace diracwell
