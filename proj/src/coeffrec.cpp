#include "hyprec/coeffrec.hpp"

namespace hyprec::coeffrec {

// The recurrences are header templates; pin the two supported fields here so
// that a template error surfaces when the library builds.
template BasicCoeffSequence<double> u_general(const BasicWeightedSeriesSpec<double>&, std::size_t);
template BasicCoeffSequence<Rational> u_general(const BasicWeightedSeriesSpec<Rational>&,
                                                std::size_t);
template BasicCoeffSequence<double> u_theta_minus1(const BasicHypParams<double>&, const double&,
                                                   std::size_t);
template BasicCoeffSequence<Rational> u_theta_minus1(const BasicHypParams<Rational>&,
                                                     const Rational&, std::size_t);
template BasicCoeffSequence<double> u_theta_plus1(const BasicHypParams<double>&, const double&,
                                                  std::size_t);
template BasicCoeffSequence<Rational> u_theta_plus1(const BasicHypParams<Rational>&,
                                                    const Rational&, std::size_t);
template BasicCoeffSequence<double> v_log_product(const BasicHypParams<double>&, std::size_t);
template BasicCoeffSequence<Rational> v_log_product(const BasicHypParams<Rational>&, std::size_t);
template BasicCoeffSequence<double> cauchy_oracle(const BasicWeightedSeriesSpec<double>&,
                                                  std::size_t);
template BasicCoeffSequence<Rational> cauchy_oracle(const BasicWeightedSeriesSpec<Rational>&,
                                                    std::size_t);
template Y2Comparison<double> y2_regression(const double&, std::size_t);
template Y2Comparison<Rational> y2_regression(const Rational&, std::size_t);

}  // namespace hyprec::coeffrec
