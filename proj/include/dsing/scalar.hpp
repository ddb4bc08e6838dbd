#ifndef DSING_SCALAR_HPP
#define DSING_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace dsing {

// Arbitrary-precision integer. Expression templates are off so the type
// composes cleanly with Eigen's own expression machinery.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Dense<BigInt>;
using AdjacencyMatrix = Eigen::MatrixXi;

}  // namespace dsing

#endif  // DSING_SCALAR_HPP
