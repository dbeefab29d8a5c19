#pragma once

#include "isoform/error.hpp"
#include "isoform/field.hpp"
#include "isoform/forms.hpp"
#include "isoform/isotropy.hpp"
#include "isoform/maschke.hpp"
#include "isoform/matrix.hpp"
#include "isoform/text_io.hpp"
