#pragma once

#include "qrep/errors.hpp"
#include "qrep/field.hpp"
#include "qrep/matrix.hpp"
#include "qrep/linalg.hpp"
#include "qrep/linear_system.hpp"
#include "qrep/module.hpp"
#include "qrep/quiver.hpp"
#include "qrep/representation.hpp"
#include "qrep/complex.hpp"
#include "qrep/resolution.hpp"
#include "qrep/model.hpp"
#include "qrep/morphism_category.hpp"
#include "qrep/extensions.hpp"
#include "qrep/json_io.hpp"
#include "qrep/harness.hpp"
