from pydantic import BaseModel, Field
from typing import Optional


class HealthResponse(BaseModel):
    status: str


class DecideRequest(BaseModel):
    expr: str
    method: str = Field(default="pcurv", pattern="^(pcurv|roots)$")
    max_prime: Optional[int] = Field(default=None, ge=2)


class BoundsRequest(BaseModel):
    expr: str


class PCurvatureRequest(BaseModel):
    expr: str
    p: int = Field(ge=2)
    naive: bool = False
